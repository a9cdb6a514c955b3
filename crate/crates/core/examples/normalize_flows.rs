//! Flow CSV in, observed/expected/modularity CSV out, the same
//! transformation as `odflow tools normalize`.
//!
//! `cargo run -p odflow --example normalize_flows`

use std::path::PathBuf;

use odflow::ingest::FlowFields;
use odflow::shell::{normalize, ModelKind, NormalizeOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/banana");
    let flows = std::fs::read(dir.join("flows.csv"))?;
    let flow_fields =
        FlowFields { origin: "From_Country_ID".into(), dest: "To_Country_ID".into(), value: "Value".into() };
    for model in [ModelKind::AdjustedPaper, ModelKind::AdjustedConserving] {
        let opts = NormalizeOptions { model, flow_fields: flow_fields.clone(), ..NormalizeOptions::default() };
        println!("== {model:?}");
        print!("{}", normalize(&flows, None, None, &opts)?);
    }
    Ok(())
}
