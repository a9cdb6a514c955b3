//! Forward and inverse projections on the unit sphere. Output is in map
//! units with y increasing northward.

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mercator is refused at and beyond this latitude.
pub const MERCATOR_LAT_LIMIT: f64 = 89.999;

/// Robinson's tabulated parallel length (X) and distance from the equator
/// (Y) at 5° steps from 0° to 90°.
pub const ROBINSON_TABLE: [(f64, f64); 19] = [
    (1.0000, 0.0000),
    (0.9986, 0.0620),
    (0.9954, 0.1240),
    (0.9900, 0.1860),
    (0.9822, 0.2480),
    (0.9730, 0.3100),
    (0.9600, 0.3720),
    (0.9427, 0.4340),
    (0.9216, 0.4958),
    (0.8962, 0.5571),
    (0.8679, 0.6176),
    (0.8350, 0.6769),
    (0.7986, 0.7346),
    (0.7597, 0.7903),
    (0.7186, 0.8435),
    (0.6732, 0.8936),
    (0.6213, 0.9394),
    (0.5722, 0.9761),
    (0.5322, 1.0000),
];
const ROBINSON_X_SCALE: f64 = 0.8487;
const ROBINSON_Y_SCALE: f64 = 1.3523;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlbersPreset {
    Us,
    Africa,
    Australia,
    China,
    Europe,
    SouthAmerica,
}

/// Standard parallels, origin latitude and central meridian, in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlbersParams {
    pub lat1: f64,
    pub lat2: f64,
    pub lat0: f64,
    pub lon0: f64,
}

impl AlbersPreset {
    pub fn params(self) -> AlbersParams {
        let (lat1, lat2, lat0, lon0) = match self {
            AlbersPreset::Us => (29.5, 45.5, 37.5, -96.0),
            AlbersPreset::Europe => (43.0, 62.0, 52.5, 10.0),
            AlbersPreset::Africa => (-18.0, 18.0, 0.0, 25.0),
            AlbersPreset::SouthAmerica => (-5.0, -42.0, -32.0, -60.0),
            AlbersPreset::Australia => (-18.0, -36.0, -27.0, 134.0),
            AlbersPreset::China => (25.0, 47.0, 36.0, 105.0),
        };
        AlbersParams { lat1, lat2, lat0, lon0 }
    }

    pub fn all() -> [AlbersPreset; 6] {
        use AlbersPreset::*;
        [Us, Africa, Australia, China, Europe, SouthAmerica]
    }

    fn label(self) -> &'static str {
        match self {
            AlbersPreset::Us => "U.S.",
            AlbersPreset::Africa => "Africa",
            AlbersPreset::Australia => "Australia",
            AlbersPreset::China => "China",
            AlbersPreset::Europe => "Europe",
            AlbersPreset::SouthAmerica => "South America",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProjectionSpec {
    #[default]
    Mercator,
    Robinson,
    GallPeters,
    Albers { preset: AlbersPreset },
}

/// Derived Albers constants on the unit sphere. Parallels symmetric about
/// the equator give n = 0, where the conic degenerates into its limit, the
/// cylindrical equal-area projection with standard parallels ±φ₁.
struct Albers {
    n: f64,
    c: f64,
    rho0: f64,
    lon0: f64,
    cos1: f64,
    sin0: f64,
}

impl Albers {
    fn new(p: AlbersParams) -> Result<Self> {
        if ![p.lat1, p.lat2, p.lat0, p.lon0].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidProjection(format!("non-finite Albers parameters {p:?}")));
        }
        let (phi1, phi2, phi0) = (p.lat1.to_radians(), p.lat2.to_radians(), p.lat0.to_radians());
        if phi1.cos() < 1e-12 {
            return Err(Error::InvalidProjection(format!("standard parallel {} is a pole", p.lat1)));
        }
        let n = (phi1.sin() + phi2.sin()) / 2.0;
        let c = phi1.cos().powi(2) + 2.0 * n * phi1.sin();
        let rho0 = if n.abs() < 1e-12 { 0.0 } else { (c - 2.0 * n * phi0.sin()).max(0.0).sqrt() / n };
        Ok(Albers { n, c, rho0, lon0: p.lon0.to_radians(), cos1: phi1.cos(), sin0: phi0.sin() })
    }

    fn cylindrical(&self) -> bool {
        self.n.abs() < 1e-12
    }

    fn forward(&self, lam: f64, phi: f64) -> (f64, f64) {
        let dlam = wrap_pi(lam - self.lon0);
        if self.cylindrical() {
            return (dlam * self.cos1, (phi.sin() - self.sin0) / self.cos1);
        }
        let rho = (self.c - 2.0 * self.n * phi.sin()).max(0.0).sqrt() / self.n;
        let theta = self.n * dlam;
        (rho * theta.sin(), self.rho0 - rho * theta.cos())
    }

    fn inverse(&self, x: f64, y: f64) -> (f64, f64) {
        if self.cylindrical() {
            let sin_phi = (y * self.cos1 + self.sin0).clamp(-1.0, 1.0);
            return (wrap_pi(self.lon0 + x / self.cos1), sin_phi.asin());
        }
        let dy = self.rho0 - y;
        let s = self.n.signum();
        let rho = s * x.hypot(dy);
        let theta = (s * x).atan2(s * dy);
        let sin_phi = ((self.c - rho * rho * self.n * self.n) / (2.0 * self.n)).clamp(-1.0, 1.0);
        (wrap_pi(self.lon0 + theta / self.n), sin_phi.asin())
    }
}

/// Wraps an angle into `[−π, π)`.
fn wrap_pi(a: f64) -> f64 {
    if (-PI..PI).contains(&a) {
        return a;
    }
    (a + PI).rem_euclid(2.0 * PI) - PI
}

fn robinson_row(abs_lat_deg: f64) -> (usize, f64) {
    let pos = (abs_lat_deg / 5.0).min(18.0);
    let i = (pos.floor() as usize).min(17);
    (i, pos - i as f64)
}

impl ProjectionSpec {
    pub fn display_name(&self) -> String {
        match self {
            ProjectionSpec::Mercator => "Mercator".into(),
            ProjectionSpec::Robinson => "Robinson".into(),
            ProjectionSpec::GallPeters => "Gall-Peters".into(),
            ProjectionSpec::Albers { preset } => format!("Albers Equal Area ({})", preset.label()),
        }
    }

    /// Projects `(lon, lat)` in degrees to map units.
    pub fn forward(&self, lon: f64, lat: f64) -> Result<(f64, f64)> {
        if !lon.is_finite() || !lat.is_finite() {
            return Err(Error::InvalidProjection(format!("non-finite coordinate ({lon}, {lat})")));
        }
        let (lam, phi) = (lon.to_radians(), lat.to_radians());
        Ok(match self {
            ProjectionSpec::Mercator => {
                if lat.abs() >= MERCATOR_LAT_LIMIT {
                    return Err(Error::PoleSingularity { lat });
                }
                (lam, phi.tan().asinh())
            }
            ProjectionSpec::GallPeters => (lam / SQRT_2, SQRT_2 * phi.sin()),
            ProjectionSpec::Robinson => {
                let (i, f) = robinson_row(lat.abs());
                let (x0, y0) = ROBINSON_TABLE[i];
                let (x1, y1) = ROBINSON_TABLE[i + 1];
                let len = x0 + (x1 - x0) * f;
                let y = y0 + (y1 - y0) * f;
                (ROBINSON_X_SCALE * len * lam, ROBINSON_Y_SCALE * y * lat.signum())
            }
            ProjectionSpec::Albers { preset } => Albers::new(preset.params())?.forward(lam, phi),
        })
    }

    /// Inverse of [`forward`](Self::forward), returning degrees.
    pub fn inverse(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        let (lam, phi) = match self {
            ProjectionSpec::Mercator => (x, y.sinh().atan()),
            ProjectionSpec::GallPeters => (x * SQRT_2, (y / SQRT_2).clamp(-1.0, 1.0).asin()),
            ProjectionSpec::Robinson => {
                let target = (y.abs() / ROBINSON_Y_SCALE).min(1.0);
                let i = ROBINSON_TABLE.windows(2).position(|w| target <= w[1].1).unwrap_or(17);
                let (x0, y0) = ROBINSON_TABLE[i];
                let (x1, y1) = ROBINSON_TABLE[i + 1];
                let f = (target - y0) / (y1 - y0);
                let lat = (5.0 * (i as f64 + f)) * y.signum();
                let len = x0 + (x1 - x0) * f;
                return Ok(((x / (ROBINSON_X_SCALE * len)).to_degrees(), lat));
            }
            ProjectionSpec::Albers { preset } => Albers::new(preset.params())?.inverse(x, y),
        };
        Ok((lam.to_degrees(), phi.to_degrees()))
    }
}
