use crate::error::Result;
use crate::geometry::{Point, ProjectionSpec};

/// Latitude clamp applied before Mercator projection so polar vertices
/// stay finite.
pub const MERCATOR_CLAMP: f64 = 85.051_128_779_806_59;

pub const PADDING: f64 = 0.05;

/// Projects geographic coordinates and fits the projected extent into the
/// canvas: uniform scale, centered, with a 5% margin on every side and y
/// flipped to screen orientation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViewTransform {
    pub projection: ProjectionSpec,
    pub scale: f64,
    pub tx: f64,
    pub ty: f64,
}

impl ViewTransform {
    /// `bbox` is `[min_x, min_y, max_x, max_y]` in map units.
    pub fn fit(projection: ProjectionSpec, bbox: [f64; 4], width: f64, height: f64) -> Self {
        let [x0, y0, x1, y1] = bbox;
        let (bw, bh) = (x1 - x0, y1 - y0);
        let (uw, uh) = (width * (1.0 - 2.0 * PADDING), height * (1.0 - 2.0 * PADDING));
        let scale = match (bw > 0.0, bh > 0.0) {
            (true, true) => (uw / bw).min(uh / bh),
            (true, false) => uw / bw,
            (false, true) => uh / bh,
            (false, false) => 1.0,
        };
        ViewTransform {
            projection,
            scale,
            tx: width / 2.0 - scale * (x0 + x1) / 2.0,
            ty: height / 2.0 + scale * (y0 + y1) / 2.0,
        }
    }

    /// Map units to screen pixels.
    pub fn to_screen(&self, x: f64, y: f64) -> Point {
        Point::new(self.tx + self.scale * x, self.ty - self.scale * y)
    }

    pub fn map_point(projection: &ProjectionSpec, lon: f64, lat: f64) -> Result<(f64, f64)> {
        let lat = match projection {
            ProjectionSpec::Mercator => lat.clamp(-MERCATOR_CLAMP, MERCATOR_CLAMP),
            _ => lat,
        };
        projection.forward(lon, lat)
    }

    pub fn project(&self, lon: f64, lat: f64) -> Result<Point> {
        let (x, y) = Self::map_point(&self.projection, lon, lat)?;
        Ok(self.to_screen(x, y))
    }
}

/// Running bounding box of projected points.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Extent([f64; 4]);

impl Extent {
    pub fn new() -> Self {
        Extent([f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY])
    }

    pub fn add(&mut self, x: f64, y: f64) {
        let b = &mut self.0;
        b[0] = b[0].min(x);
        b[1] = b[1].min(y);
        b[2] = b[2].max(x);
        b[3] = b[3].max(y);
    }

    pub fn bbox(&self) -> [f64; 4] {
        if self.0[0].is_finite() {
            self.0
        } else {
            [0.0; 4]
        }
    }
}
