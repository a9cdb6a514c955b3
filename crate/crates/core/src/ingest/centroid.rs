//! Planar area-weighted centroids (lon/lat treated as x/y).

use crate::error::{Error, Result};
use crate::model::{NodeRecord, Polygon, RegionFeature};

/// Area and first moments of one ring about `origin`, normalised so the
/// area is nonnegative regardless of winding.
fn ring_moments(ring: &[[f64; 2]], origin: [f64; 2]) -> (f64, f64, f64) {
    let n = ring.len();
    let (mut a, mut mx, mut my) = (0.0, 0.0, 0.0);
    for i in 0..n {
        let [x0, y0] = ring[i];
        let [x1, y1] = ring[(i + 1) % n];
        let (x0, y0, x1, y1) = (x0 - origin[0], y0 - origin[1], x1 - origin[0], y1 - origin[1]);
        let cross = x0 * y1 - x1 * y0;
        a += cross;
        mx += (x0 + x1) * cross;
        my += (y0 + y1) * cross;
    }
    // a is twice the signed area; moments are 6·A·c.
    let (a, mx, my) = (a / 2.0, mx / 6.0, my / 6.0);
    if a < 0.0 {
        (-a, -mx, -my)
    } else {
        (a, mx, my)
    }
}

fn accumulate<'a>(polygons: impl Iterator<Item = &'a Polygon>, origin: [f64; 2]) -> (f64, f64, f64) {
    let (mut area, mut mx, mut my) = (0.0, 0.0, 0.0);
    for polygon in polygons {
        let (a, x, y) = ring_moments(&polygon.exterior, origin);
        area += a;
        mx += x;
        my += y;
        for hole in &polygon.holes {
            let (a, x, y) = ring_moments(hole, origin);
            area -= a;
            mx -= x;
            my -= y;
        }
    }
    (area, mx, my)
}

/// Centroid of all parts of a region, weighted by area, holes subtracted.
/// Returns `None` when the total area is zero.
pub fn region_centroid(polygons: &[Polygon]) -> Option<[f64; 2]> {
    let origin = polygons.first()?.exterior.first().copied()?;
    let (area, mx, my) = accumulate(polygons.iter(), origin);
    if !(area.abs() > 0.0) {
        return None;
    }
    Some([origin[0] + mx / area, origin[1] + my / area])
}

pub fn polygon_centroid(polygon: &Polygon) -> Option<[f64; 2]> {
    region_centroid(std::slice::from_ref(polygon))
}

/// One node per region at its centroid, carrying the region id and
/// attributes.
pub fn polygons_to_points(features: &[RegionFeature]) -> Result<Vec<NodeRecord>> {
    features
        .iter()
        .map(|f| {
            let [lon, lat] =
                region_centroid(&f.polygons).ok_or_else(|| Error::DegenerateGeometry { id: f.id.clone() })?;
            Ok(NodeRecord { id: f.id.clone(), lon, lat, attributes: f.attributes.clone() })
        })
        .collect()
}
