//! Render any project file, optionally highlighting one node's flows.
//!
//! `cargo run -p odflow --example render_project -- <project.json> [node-id] [out.svg]`

use std::path::PathBuf;

use odflow::scene::{compose, to_svg, DEFAULT_DECIMALS};
use odflow::ProjectFile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().map_or_else(
        || PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/projects/migration.project.json"),
        PathBuf::from,
    );
    let selection = args.next();
    let out = args.next().map_or_else(|| std::env::temp_dir().join("render_project.svg"), PathBuf::from);

    let project = ProjectFile::load(&path)?;
    let scene = compose(&project, selection.as_deref())?;
    let dimmed = scene.flows.iter().filter(|f| f.dimmed).count();
    println!(
        "{}: {} regions, {} flows ({dimmed} dimmed), {} nodes, {} legends",
        path.display(),
        scene.regions.len(),
        scene.flows.len(),
        scene.nodes.len(),
        scene.legends.len()
    );
    std::fs::write(&out, to_svg(&scene, DEFAULT_DECIMALS))?;
    println!("wrote {}", out.display());
    Ok(())
}
