use crate::classify::{classify, scheme_colors, unit_position, ColorRamp, Rgb, Scale};
use crate::error::Result;
use crate::project::{ColorSpec, LayerStyle, Scaling};

/// Resolved value-to-size and value-to-color mapping for one layer.
#[derive(Debug, Clone)]
pub(crate) struct Symbolizer {
    pub scale: Scale,
    ramp: ColorRamp,
    range: [f64; 2],
}

impl Symbolizer {
    pub fn new(style: &LayerStyle, values: &[f64]) -> Result<Self> {
        let (min, max) = values
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
        let (min, max) = if values.is_empty() { (0.0, 0.0) } else { (min, max) };
        let scale = match &style.scaling {
            Scaling::Classified { method, k, breaks } if !values.is_empty() => {
                Scale::Classified(classify(values, *method, *k, breaks.as_deref())?)
            }
            _ => Scale::Proportional { min, max },
        };
        let ramp = match &style.color {
            ColorSpec::Single { color } => ColorRamp::Single(*color),
            ColorSpec::Continuous { from, to } => ColorRamp::Continuous { from: *from, to: *to },
            ColorSpec::Classified { scheme, k } => ColorRamp::Classified(scheme_colors(scheme, *k)?),
        };
        Ok(Symbolizer { scale, ramp, range: style.width_range })
    }

    pub fn size(&self, value: f64) -> f64 {
        let [lo, hi] = self.range;
        lo + (hi - lo) * self.scale.position(value)
    }

    pub fn color(&self, value: f64) -> Rgb {
        match (&self.ramp, &self.scale) {
            (ColorRamp::Single(c), _) => *c,
            (ColorRamp::Continuous { from, to }, scale) => from.lerp(*to, scale.position(value)),
            (ColorRamp::Classified(colors), Scale::Classified(c)) => {
                colors[c.assign(value).min(colors.len() - 1)]
            }
            (ColorRamp::Classified(colors), Scale::Proportional { min, max }) => {
                let k = colors.len();
                let slot = ((unit_position(value, *min, *max) * k as f64).floor() as usize).min(k - 1);
                colors[slot]
            }
        }
    }
}
