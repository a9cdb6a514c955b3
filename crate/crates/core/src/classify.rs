//! Mapping magnitudes to visual variables: class breaks, proportional
//! widths, color interpolation and legend anchors.
//!
//! Breaks are inclusive upper bounds: class `c` holds values in
//! `(breaks[c-1], breaks[c]]`, the first class is closed below and the last
//! class runs to the maximum.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{exact_sum, format_decimal};

pub use crate::schemes::{scheme_colors, scheme_names};

pub const MIN_CLASSES: usize = 2;
pub const MAX_CLASSES: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassMethod {
    EqualInterval,
    Quantile,
    /// Optimal breaks minimizing within-class squared deviations.
    Jenks,
    Manual,
}

impl ClassMethod {
    fn label(self) -> &'static str {
        match self {
            ClassMethod::EqualInterval => "equal interval",
            ClassMethod::Quantile => "quantile",
            ClassMethod::Jenks => "jenks",
            ClassMethod::Manual => "manual",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub method: ClassMethod,
    /// `k − 1` strictly ascending upper bounds.
    pub breaks: Vec<f64>,
    pub min: f64,
    pub max: f64,
}

impl Classification {
    pub fn classes(&self) -> usize {
        self.breaks.len() + 1
    }

    /// Class index of `value`; monotone nondecreasing in `value`.
    pub fn assign(&self, value: f64) -> usize {
        self.breaks.partition_point(|&b| b < value)
    }

    /// Lower and upper label bounds of class `c`.
    pub fn bounds(&self, c: usize) -> (f64, f64) {
        let lo = if c == 0 { self.min } else { self.breaks[c - 1] };
        let hi = if c + 1 >= self.classes() { self.max } else { self.breaks[c] };
        (lo, hi)
    }

    pub fn counts(&self, values: &[f64]) -> Vec<usize> {
        let mut counts = vec![0; self.classes()];
        for &v in values {
            counts[self.assign(v)] += 1;
        }
        counts
    }
}

fn sorted_finite(values: &[f64]) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::EmptyDataset("no values to classify".into()));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidStyle("cannot classify non-finite values".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(sorted)
}

fn distinct_count(sorted: &[f64]) -> usize {
    1 + sorted.windows(2).filter(|w| w[0] < w[1]).count()
}

/// Computes class breaks for `values`.
///
/// * equal interval: `min + i·(max − min)/k`
/// * quantile: the `⌈i·n/k⌉`-th smallest value (1-based)
/// * jenks: exact dynamic programming over sorted values
/// * manual: `manual_breaks` as given, `k` must equal `breaks + 1`
pub fn classify(values: &[f64], method: ClassMethod, k: usize, manual_breaks: Option<&[f64]>) -> Result<Classification> {
    if !(MIN_CLASSES..=MAX_CLASSES).contains(&k) {
        return Err(Error::InvalidStyle(format!("class count must be {MIN_CLASSES}..={MAX_CLASSES}, got {k}")));
    }
    let sorted = sorted_finite(values)?;
    let (min, max) = (sorted[0], sorted[sorted.len() - 1]);
    let distinct = distinct_count(&sorted);
    let too_few = |classes| Error::TooFewDistinctValues { method: method.label(), classes, distinct };

    let breaks = match method {
        ClassMethod::EqualInterval => {
            if !(max > min) {
                return Err(too_few(k));
            }
            (1..k).map(|i| min + i as f64 * (max - min) / k as f64).collect()
        }
        ClassMethod::Quantile => {
            if distinct < k {
                return Err(too_few(k));
            }
            let n = sorted.len();
            let breaks: Vec<f64> = (1..k).map(|i| sorted[(i * n).div_ceil(k) - 1]).collect();
            // Heavy ties can collapse positional breaks even with enough
            // distinct values.
            let ascending = breaks.windows(2).all(|w| w[0] < w[1]);
            if !ascending || breaks.last().is_some_and(|&b| b >= max) {
                return Err(too_few(k));
            }
            breaks
        }
        ClassMethod::Jenks => {
            if distinct < k {
                return Err(too_few(k));
            }
            jenks_breaks(&sorted, k)
        }
        ClassMethod::Manual => {
            let breaks = manual_breaks.ok_or_else(|| Error::InvalidStyle("manual classification needs breaks".into()))?;
            if breaks.len() + 1 != k {
                return Err(Error::InvalidStyle(format!("{} manual breaks do not make {k} classes", breaks.len())));
            }
            let mut prev = f64::NEG_INFINITY;
            for &b in breaks {
                if !b.is_finite() || b <= prev || b < min || b >= max {
                    return Err(Error::BreaksOutOfRange { value: b });
                }
                prev = b;
            }
            breaks.to_vec()
        }
    };
    Ok(Classification { method, breaks, min, max })
}

/// Fisher's exact optimal partition of sorted data into `k` contiguous
/// classes. Splits only fall between distinct values. Caller guarantees at
/// least `k` distinct values.
fn jenks_breaks(sorted: &[f64], k: usize) -> Vec<f64> {
    let n = sorted.len();
    let shift = exact_sum(sorted.iter().copied()) / n as f64;
    let mut s1 = vec![0.0; n + 1];
    let mut s2 = vec![0.0; n + 1];
    for (i, &x) in sorted.iter().enumerate() {
        let x = x - shift;
        s1[i + 1] = s1[i] + x;
        s2[i + 1] = s2[i] + x * x;
    }
    // Squared deviation of sorted[a..b].
    let ssd = |a: usize, b: usize| {
        let cnt = (b - a) as f64;
        let s = s1[b] - s1[a];
        (s2[b] - s2[a] - s * s / cnt).max(0.0)
    };
    let can_split = |i: usize| i > 0 && i < n && sorted[i - 1] < sorted[i];

    // cost[c][j]: best SSD of sorted[..j] in c + 1 classes; start[c][j] is
    // where the last class begins.
    let mut cost = vec![vec![f64::INFINITY; n + 1]; k];
    let mut start = vec![vec![0usize; n + 1]; k];
    for j in 1..=n {
        cost[0][j] = ssd(0, j);
    }
    for c in 1..k {
        for j in (c + 1)..=n {
            let mut best = f64::INFINITY;
            let mut arg = 0;
            for i in c..j {
                if !can_split(i) || !cost[c - 1][i].is_finite() {
                    continue;
                }
                let candidate = cost[c - 1][i] + ssd(i, j);
                if candidate < best {
                    best = candidate;
                    arg = i;
                }
            }
            cost[c][j] = best;
            start[c][j] = arg;
        }
    }

    let mut breaks = vec![0.0; k - 1];
    let mut end = n;
    for c in (1..k).rev() {
        let s = start[c][end];
        breaks[c - 1] = sorted[s - 1];
        end = s;
    }
    breaks
}

/// Linear width between `width_range` for `value` in `[vmin, vmax]`;
/// the midpoint when all data are equal.
pub fn proportional_width(value: f64, vmin: f64, vmax: f64, width_range: [f64; 2]) -> f64 {
    let [wmin, wmax] = width_range;
    wmin + unit_position(value, vmin, vmax) * (wmax - wmin)
}

/// `(value − vmin)/(vmax − vmin)` clamped to `[0, 1]`, `0.5` when the
/// range is empty.
pub fn unit_position(value: f64, vmin: f64, vmax: f64) -> f64 {
    if !(vmax > vmin) {
        return 0.5;
    }
    ((value - vmin) / (vmax - vmin)).clamp(0.0, 1.0)
}

/// 8-bit RGB color, written `#rrggbb`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub const BLACK: Rgb = Rgb(0, 0, 0);
    pub const WHITE: Rgb = Rgb(255, 255, 255);

    /// Channel-wise linear mix at `t`, rounded half-up.
    pub fn lerp(self, other: Rgb, t: f64) -> Rgb {
        let mix = |a: u8, b: u8| {
            let v = a as f64 + (b as f64 - a as f64) * t;
            (v + 0.5).floor().clamp(0.0, 255.0) as u8
        };
        Rgb(mix(self.0, other.0), mix(self.1, other.1), mix(self.2, other.2))
    }
}

impl fmt::Display for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }
}

impl FromStr for Rgb {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let hex = s.trim().strip_prefix('#').unwrap_or(s.trim());
        let bad = || Error::InvalidStyle(format!("invalid color {s:?}"));
        if hex.len() != 6 || !hex.is_ascii() {
            return Err(bad());
        }
        let channel = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).map_err(|_| bad());
        Ok(Rgb(channel(0)?, channel(2)?, channel(4)?))
    }
}

impl Serialize for Rgb {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rgb {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ColorRamp {
    Single(Rgb),
    Continuous { from: Rgb, to: Rgb },
    /// One color per class.
    Classified(Vec<Rgb>),
}

/// Color for `value` on `ramp` with min-max scaling. Classified ramps pick
/// the color of the equal-width slot `t` falls in; scenes with a real
/// classification index the ramp by class instead.
pub fn interpolate_color(value: f64, vmin: f64, vmax: f64, ramp: &ColorRamp) -> Rgb {
    let t = unit_position(value, vmin, vmax);
    match ramp {
        ColorRamp::Single(c) => *c,
        ColorRamp::Continuous { from, to } => from.lerp(*to, t),
        ColorRamp::Classified(colors) => {
            let k = colors.len().max(1);
            let slot = ((t * k as f64).floor() as usize).min(k - 1);
            colors.get(slot).copied().unwrap_or(Rgb::BLACK)
        }
    }
}

/// How a layer maps its magnitude to size/color.
#[derive(Debug, Clone, PartialEq)]
pub enum Scale {
    Proportional { min: f64, max: f64 },
    Classified(Classification),
}

impl Scale {
    /// Position of `value` on `[0, 1]`: linear for proportional scales,
    /// `class/(k−1)` for classified ones.
    pub fn position(&self, value: f64) -> f64 {
        match self {
            Scale::Proportional { min, max } => unit_position(value, *min, *max),
            Scale::Classified(c) => c.assign(value) as f64 / (c.classes() - 1) as f64,
        }
    }

    pub fn class_of(&self, value: f64) -> Option<usize> {
        match self {
            Scale::Proportional { .. } => None,
            Scale::Classified(c) => Some(c.assign(value)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LegendAnchor {
    /// Value the legend glyph is drawn for.
    pub value: f64,
    pub class: Option<usize>,
    pub label: String,
}

/// Legend entries: min/mean/max for proportional scales (one entry when all
/// values are equal), one `lower – upper` entry per class otherwise.
pub fn legend_values(values: &[f64], scale: &Scale, decimals: usize) -> Vec<LegendAnchor> {
    let fmt = |v: f64| format_decimal(v, decimals, false);
    match scale {
        Scale::Proportional { .. } => {
            if values.is_empty() {
                return Vec::new();
            }
            let min = values.iter().copied().fold(f64::INFINITY, f64::min);
            let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if min == max {
                return vec![LegendAnchor { value: min, class: None, label: fmt(min) }];
            }
            let mean = exact_sum(values.iter().copied()) / values.len() as f64;
            [min, mean, max].into_iter().map(|v| LegendAnchor { value: v, class: None, label: fmt(v) }).collect()
        }
        Scale::Classified(c) => (0..c.classes())
            .map(|i| {
                let (lo, hi) = c.bounds(i);
                LegendAnchor { value: hi, class: Some(i), label: format!("{} – {}", fmt(lo), fmt(hi)) }
            })
            .collect(),
    }
}
