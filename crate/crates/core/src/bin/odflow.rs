fn main() -> std::process::ExitCode {
    odflow::shell::run(std::env::args_os())
}
