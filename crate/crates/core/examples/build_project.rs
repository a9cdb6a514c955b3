//! Assemble a project in code, save it as JSON and render it.
//!
//! `cargo run -p odflow --example build_project`

use odflow::classify::{ClassMethod, Rgb};
use odflow::geometry::{FlowStyle, ProjectionSpec};
use odflow::project::{ColorSpec, Datasets, Joins, LayerStyle, Layers, Scaling};
use odflow::scene::{render_project, DEFAULT_DECIMALS};
use odflow::ProjectFile;

const NODES: &str = "id,X,Y
LON,-0.13,51.51
PAR,2.35,48.86
BER,13.40,52.52
MAD,-3.70,40.42
ROM,12.50,41.90
";

const FLOWS: &str = "origin,dest,value
LON,PAR,900
PAR,LON,850
PAR,BER,400
BER,PAR,380
MAD,PAR,300
ROM,PAR,260
LON,MAD,220
BER,ROM,120
ROM,MAD,60
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let datasets = Datasets { nodes_csv: NODES.into(), flows_csv: FLOWS.into(), ..Datasets::default() };
    let mut nodes = LayerStyle::new(Scaling::Proportional, [4.0, 14.0], ColorSpec::Single { color: "#3a5a40".parse()? });
    nodes.field = Some("gross".into());
    let mut flows = LayerStyle::new(
        Scaling::Classified { method: ClassMethod::Jenks, k: 3, breaks: None },
        [1.5, 8.0],
        ColorSpec::Classified { scheme: "Oranges".into(), k: 3 },
    );
    flows.flow_style = FlowStyle::Tapered;
    flows.opacity = 0.9;

    let mut project = ProjectFile::new(datasets, Joins::default(), Layers { regions: None, nodes, flows });
    project.map.projection = ProjectionSpec::GallPeters;
    project.map.title = Some("Rail passengers (thousands)".into());
    project.map.background = Rgb(0xfa, 0xf8, 0xf2);
    project.map.north_arrow = true;

    let dir = std::env::temp_dir();
    project.save(dir.join("build_project.json"))?;
    let reloaded = ProjectFile::load(dir.join("build_project.json"))?;
    assert_eq!(reloaded, project);
    std::fs::write(dir.join("build_project.svg"), render_project(&project, Some("PAR"), DEFAULT_DECIMALS)?)?;
    println!("wrote {0}/build_project.json and {0}/build_project.svg", dir.display());
    Ok(())
}
