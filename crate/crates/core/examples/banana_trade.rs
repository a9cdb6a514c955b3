//! Banana trade in South America: node statistics and the finished map.
//!
//! `cargo run -p odflow --example banana_trade [out.svg]`

use std::path::PathBuf;

use odflow::analytics::node_stats;
use odflow::scene::{render_project, DEFAULT_DECIMALS};
use odflow::ProjectFile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/banana/banana.project.json");
    let project = ProjectFile::load(&fixture)?;
    let data = project.resolve()?;

    println!("{:<28} {:>12} {:>12} {:>12} {:>8}", "country", "imports", "exports", "net", "ratio");
    let names: Vec<String> = data
        .network
        .nodes()
        .iter()
        .map(|n| n.attributes.get("Country").map_or_else(|| n.id.clone(), |v| v.to_string()))
        .collect();
    for (s, name) in node_stats(&data.network, None)?.iter().zip(&names) {
        println!("{name:<28} {:>12.0} {:>12.0} {:>12.0} {:>8.3}", s.inflow, s.outflow, s.net, s.net_ratio);
    }
    if let Some(report) = &data.region_join {
        println!("\nregion join: {report:?}");
    }

    let out = std::env::args().nth(1).map_or_else(|| std::env::temp_dir().join("banana_trade.svg"), PathBuf::from);
    std::fs::write(&out, render_project(&project, None, DEFAULT_DECIMALS)?)?;
    println!("wrote {}", out.display());
    Ok(())
}
