use crate::classify::{LegendAnchor, Rgb};
use crate::error::Result;
use crate::geometry::Point;
use crate::project::LayerStyle;

use super::symbol::Symbolizer;

pub(crate) const SPACING: f64 = 24.0;
const TITLE_HEIGHT: f64 = 20.0;
const MIN_ROW: f64 = 18.0;
const LABEL_COLUMN: f64 = 110.0;
const LINE_LENGTH: f64 = 36.0;
const BOX: f64 = 18.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendLayer {
    Regions,
    Nodes,
    Flows,
}

impl LegendLayer {
    pub fn name(self) -> &'static str {
        match self {
            LegendLayer::Regions => "regions",
            LegendLayer::Nodes => "nodes",
            LegendLayer::Flows => "flows",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Glyph {
    /// A flow sample: horizontal bar of the given width.
    Line { width: f64, color: Rgb },
    Circle { radius: f64, fill: Rgb, stroke: Rgb },
    Swatch { fill: Rgb },
}

impl Glyph {
    fn extent(&self) -> (f64, f64) {
        match *self {
            Glyph::Line { width, .. } => (LINE_LENGTH, width),
            Glyph::Circle { radius, .. } => (2.0 * radius, 2.0 * radius),
            Glyph::Swatch { .. } => (BOX, BOX * 0.75),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LegendEntry {
    pub glyph: Glyph,
    pub label: String,
}

/// A legend block. Geometry depends only on glyph sizes, never on label
/// text, so changing label precision leaves shapes untouched.
#[derive(Debug, Clone, PartialEq)]
pub struct Legend {
    pub layer: LegendLayer,
    pub title: String,
    pub classified: bool,
    /// Top-left corner in canvas pixels.
    pub origin: Point,
    pub entries: Vec<LegendEntry>,
}

impl Legend {
    pub fn glyph_column(&self) -> f64 {
        self.entries.iter().map(|e| e.glyph.extent().0).fold(LINE_LENGTH.min(BOX), f64::max)
    }

    pub fn row_height(entry: &LegendEntry) -> f64 {
        (entry.glyph.extent().1 + 6.0).max(MIN_ROW)
    }

    pub fn width(&self) -> f64 {
        self.glyph_column() + 10.0 + LABEL_COLUMN
    }

    pub fn height(&self) -> f64 {
        TITLE_HEIGHT + self.entries.iter().map(Self::row_height).sum::<f64>()
    }
}

/// Legend for one layer. Proportional anchors give sample glyphs at their
/// values; classified anchors give one row per class drawn at the class's
/// size and color. `values` are the layer's data values.
pub fn build_legend(layer: LegendLayer, anchors: &[LegendAnchor], style: &LayerStyle, values: &[f64]) -> Result<Legend> {
    let sym = Symbolizer::new(style, values)?;
    let entries = anchors
        .iter()
        .map(|a| {
            let color = sym.color(a.value);
            let glyph = match layer {
                LegendLayer::Flows => Glyph::Line { width: sym.size(a.value), color },
                LegendLayer::Nodes => Glyph::Circle { radius: sym.size(a.value), fill: color, stroke: style.stroke.color },
                LegendLayer::Regions => Glyph::Swatch { fill: color },
            };
            LegendEntry { glyph, label: a.label.clone() }
        })
        .collect();
    Ok(Legend {
        layer,
        title: style.legend.title.clone(),
        classified: anchors.iter().any(|a| a.class.is_some()),
        origin: Point::default(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{legend_values, proportional_width, ClassMethod, Scale};
    use crate::project::{ColorSpec, Scaling};

    #[test]
    fn proportional_flow_glyphs() {
        let style = LayerStyle::new(Scaling::Proportional, [1.0, 11.0], ColorSpec::Single { color: Rgb(0, 0, 0) });
        let values = [10.0, 20.0, 60.0];
        let anchors = legend_values(&values, &Scale::Proportional { min: 10.0, max: 60.0 }, 0);
        let legend = build_legend(LegendLayer::Flows, &anchors, &style, &values).unwrap();
        let widths: Vec<f64> = legend
            .entries
            .iter()
            .map(|e| match e.glyph {
                Glyph::Line { width, .. } => width,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(widths, vec![1.0, proportional_width(30.0, 10.0, 60.0, [1.0, 11.0]), 11.0]);
        assert!(!legend.classified);
    }

    #[test]
    fn classified_rows() {
        let style = LayerStyle::new(
            Scaling::Classified { method: ClassMethod::Quantile, k: 5, breaks: None },
            [2.0, 8.0],
            ColorSpec::Classified { scheme: "Blues".into(), k: 5 },
        );
        let values: Vec<f64> = (1..=20).map(f64::from).collect();
        let sym = Symbolizer::new(&style, &values).unwrap();
        let anchors = legend_values(&values, &sym.scale, 1);
        let legend = build_legend(LegendLayer::Regions, &anchors, &style, &values).unwrap();
        assert_eq!(legend.entries.len(), 5);
        assert!(legend.classified);
        let h = legend.height();
        let relabeled = build_legend(LegendLayer::Regions, &legend_values(&values, &sym.scale, 3), &style, &values).unwrap();
        assert_eq!(relabeled.height(), h);
        assert_eq!(relabeled.width(), legend.width());
    }
}
