//! Forward and inverse projection of a few cities under every supported
//! projection.
//!
//! `cargo run -p odflow --example projections`

use odflow::geometry::{AlbersPreset, ProjectionSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cities = [("Quito", -78.47, -0.18), ("Buenos Aires", -58.38, -34.60), ("Oslo", 10.75, 59.91)];
    let mut specs = vec![ProjectionSpec::Mercator, ProjectionSpec::GallPeters, ProjectionSpec::Robinson];
    specs.extend(AlbersPreset::all().into_iter().map(|preset| ProjectionSpec::Albers { preset }));

    for spec in specs {
        println!("{}", spec.display_name());
        for (name, lon, lat) in cities {
            let (x, y) = spec.forward(lon, lat)?;
            let (lon2, lat2) = spec.inverse(x, y)?;
            println!("  {name:<13} ({lon:>7.2}, {lat:>6.2}) -> ({x:>+8.5}, {y:>+8.5}) -> ({lon2:>7.2}, {lat2:>6.2})");
        }
    }

    match ProjectionSpec::Mercator.forward(0.0, 90.0) {
        Ok(p) => println!("unexpected: {p:?}"),
        Err(e) => println!("Mercator at the pole: {e}"),
    }
    Ok(())
}
