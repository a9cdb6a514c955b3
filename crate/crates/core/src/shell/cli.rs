use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use super::service::{serve, ServiceConfig};
use super::tools::{normalize, poly2points, ModelKind, NormalizeOptions};
use crate::error::Error;
use crate::ingest::{FlowFields, NodeFields};
use crate::project::ProjectFile;
use crate::scene::{render_project, DEFAULT_DECIMALS};

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "odflow", version, about = "Origin-destination flow maps: render projects, prepare data, serve")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Render a project file to SVG.
    Render {
        project: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Highlight flows touching this node id; others are dimmed.
        #[arg(long = "select")]
        selection: Option<String>,
        /// Coordinate decimal places (1 to 6).
        #[arg(long, default_value_t = DEFAULT_DECIMALS as u8, value_parser = clap::value_parser!(u8).range(1..=6))]
        decimals: u8,
    },
    /// Data preparation tools.
    #[command(subcommand)]
    Tools(Tool),
    /// Run the HTTP design service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "odflow-data")]
        data_dir: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Tool {
    /// Convert region polygons to a node CSV at their centroids.
    Poly2points {
        geojson: PathBuf,
        /// Output CSV; standard output when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Feature property holding the region id.
        #[arg(long)]
        id_property: Option<String>,
    },
    /// Turn a flow CSV into observed, expected and modularity columns.
    Normalize(NormalizeArgs),
}

#[derive(Debug, Args)]
pub struct NormalizeArgs {
    #[arg(long)]
    pub flows: PathBuf,
    #[arg(long)]
    pub nodes: Option<PathBuf>,
    /// CSV with origin_id,dest_id,distance for the gravity model.
    #[arg(long)]
    pub distances: Option<PathBuf>,
    #[arg(long, default_value = "adjusted-paper")]
    pub model: ModelKind,
    /// Gravity distance-decay exponent.
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "origin")]
    pub origin_field: String,
    #[arg(long, default_value = "dest")]
    pub dest_field: String,
    #[arg(long, default_value = "value")]
    pub value_field: String,
    #[arg(long, default_value = "id")]
    pub id_field: String,
    #[arg(long, default_value = "X")]
    pub x_field: String,
    #[arg(long, default_value = "Y")]
    pub y_field: String,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Internal(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `args` and runs the command. Exit codes: 0 success, 2 input
/// error, 3 internal error.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Render { project, out, selection, decimals } => {
            let p = ProjectFile::from_json(&read(&project)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", project.display())))?;
            let svg = render_project(&p, selection.as_deref(), usize::from(decimals))?;
            write(Some(&out), &svg)
        }
        Command::Tools(Tool::Poly2points { geojson, out, id_property }) => {
            let csv = poly2points(&read(&geojson)?, id_property.as_deref())?;
            write(out.as_deref(), &csv)
        }
        Command::Tools(Tool::Normalize(a)) => {
            let flows = read(&a.flows)?;
            let nodes = a.nodes.as_deref().map(read).transpose()?;
            let distances = a.distances.as_deref().map(read).transpose()?;
            let opts = NormalizeOptions {
                model: a.model,
                beta: a.beta,
                flow_fields: FlowFields { origin: a.origin_field, dest: a.dest_field, value: a.value_field },
                node_fields: NodeFields { id: a.id_field, x: a.x_field, y: a.y_field },
            };
            let csv = normalize(&flows, nodes.as_deref(), distances.as_deref(), &opts)?;
            write(a.out.as_deref(), &csv)
        }
        Command::Serve { port, data_dir } => {
            let config = ServiceConfig::from_env(data_dir).map_err(Failure::Input)?;
            let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure::Internal(e.to_string()))?;
            runtime.block_on(serve(port, config)).map_err(|e| Failure::Internal(e.to_string()))
        }
    }
}
