//! Null models for expected flow and the modularity transform.
//!
//! `cargo run -p odflow --example expected_flows`

use odflow::analytics::{expected_flows, modularity_transform, DistanceMatrix, GravityOptions, NullModel};
use odflow::{FlowNetwork, FlowRecord, NodeRecord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let nodes = vec![
        NodeRecord::new("Lima", -77.04, -12.05),
        NodeRecord::new("Quito", -78.47, -0.18),
        NodeRecord::new("Bogota", -74.07, 4.71),
        NodeRecord::new("Santiago", -70.67, -33.45),
    ];
    let flows = [
        ("Lima", "Quito", 120.0),
        ("Quito", "Lima", 80.0),
        ("Lima", "Bogota", 60.0),
        ("Bogota", "Lima", 95.0),
        ("Quito", "Bogota", 140.0),
        ("Bogota", "Quito", 110.0),
        ("Santiago", "Lima", 70.0),
        ("Lima", "Santiago", 45.0),
        ("Santiago", "Bogota", 20.0),
        ("Bogota", "Santiago", 15.0),
        ("Quito", "Santiago", 10.0),
        ("Santiago", "Quito", 12.0),
    ]
    .into_iter()
    .map(|(o, d, v)| FlowRecord::new(o, d, v))
    .collect();
    let network = FlowNetwork::build(nodes, flows)?;
    let distances = DistanceMatrix::great_circle(network.nodes());

    let models = [
        NullModel::AdjustedPaper,
        NullModel::AdjustedConserving,
        NullModel::Gravity(GravityOptions::default()),
    ];
    for model in models {
        let expected = expected_flows(&network, &model, Some(&distances))?;
        println!("== {} (expected total {:.2}, {} iterations)", model.name(), expected.total(), expected.iterations);
        for record in modularity_transform(&network, &expected)? {
            let (o, d) = (network.node_index(&record.origin).unwrap(), network.node_index(&record.dest).unwrap());
            println!(
                "  {:>8} -> {:<8} expected {:>8.2}  modularity {:>+8.2}",
                record.origin,
                record.dest,
                expected.get(o, d),
                record.value
            );
        }
    }
    Ok(())
}
