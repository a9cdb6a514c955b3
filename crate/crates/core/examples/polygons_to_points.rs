//! Region polygons to a node table at their area-weighted centroids.
//!
//! `cargo run -p odflow --example polygons_to_points`

use std::path::PathBuf;

use odflow::ingest::{parse_regions, points_to_csv, polygons_to_points, region_centroid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/banana/regions.geojson");
    let regions = parse_regions(&std::fs::read(path)?, Some("CntryCode"))?;
    for region in &regions {
        let c = region_centroid(&region.polygons);
        println!("{:>4}: {} part(s), centroid {c:?}", region.id, region.polygons.len());
    }
    print!("\n{}", points_to_csv(&polygons_to_points(&regions)?));
    Ok(())
}
