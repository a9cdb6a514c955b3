use crate::geometry::Point;
use crate::numeric::format_decimal;

use super::legend::{Glyph, Legend};
use super::{data_number, Paint, SceneDocument, TextElement};

pub const DEFAULT_DECIMALS: usize = 3;

/// Style numbers (opacities, stroke widths) keep this many places
/// regardless of the coordinate precision.
const STYLE_DECIMALS: usize = 6;

struct Writer {
    out: String,
    decimals: usize,
}

impl Writer {
    fn num(&self, v: f64) -> String {
        format_decimal(v, self.decimals, true)
    }

    fn pt(&self, p: Point) -> String {
        format!("{},{}", self.num(p.x), self.num(p.y))
    }

    fn line(&mut self, s: &str) {
        self.out.push_str(s);
        self.out.push('\n');
    }

    fn paint(&self, p: &Paint) -> String {
        let stroke = if p.stroke_width > 0.0 {
            format!(r#"stroke="{}" stroke-width="{}""#, p.stroke, style_num(p.stroke_width))
        } else {
            r#"stroke="none""#.to_string()
        };
        format!(r#"fill="{}" fill-opacity="{}" {stroke}"#, p.fill, style_num(p.fill_opacity))
    }

    fn text(&mut self, class: &str, t: &TextElement) {
        let s = format!(
            r#"<text class="{class}" x="{}" y="{}" font-size="{}" text-anchor="{}">{}</text>"#,
            self.num(t.at.x),
            self.num(t.at.y),
            style_num(t.size),
            t.anchor,
            escape(&t.text)
        );
        self.line(&s);
    }
}

fn style_num(v: f64) -> String {
    format_decimal(v, STYLE_DECIMALS, true)
}

pub(crate) fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Standalone SVG 1.1 document. Coordinates are rounded half-up to
/// `decimals` places (clamped to 1..=6); the same scene always yields the
/// same bytes. Empty layers are omitted.
pub fn to_svg(scene: &SceneDocument, decimals: usize) -> String {
    let mut w = Writer { out: String::new(), decimals: decimals.clamp(1, 6) };
    let (width, height) = (scene.width, scene.height);
    w.line(r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    w.line(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    ));
    w.line(&format!(
        r#"<rect class="background" x="0" y="0" width="{width}" height="{height}" fill="{}" fill-opacity="{}"/>"#,
        scene.background,
        style_num(scene.background_opacity)
    ));

    if !scene.regions.is_empty() {
        w.line(r#"<g id="regions">"#);
        for r in &scene.regions {
            let mut d = String::new();
            for ring in &r.rings {
                for (i, &p) in ring.iter().enumerate() {
                    if !d.is_empty() {
                        d.push(' ');
                    }
                    d.push(if i == 0 { 'M' } else { 'L' });
                    d.push_str(&w.pt(p));
                }
                d.push_str(" Z");
            }
            let value = r.value.map(|v| format!(r#" data-value="{}""#, data_number(v))).unwrap_or_default();
            let s = format!(
                r#"<path class="region" data-id="{}"{value} d="{d}" fill-rule="evenodd" {}/>"#,
                escape(&r.id),
                w.paint(&r.paint)
            );
            w.line(&s);
        }
        w.line("</g>");
    }

    if !scene.flows.is_empty() {
        w.line(r#"<g id="flows">"#);
        for f in &scene.flows {
            let s = format!(
                r#"<path class="flow{}" data-origin="{}" data-dest="{}" data-value="{}" d="{}" {}/>"#,
                if f.dimmed { " dimmed" } else { "" },
                escape(&f.origin),
                escape(&f.dest),
                data_number(f.value),
                f.path.to_path_data(Some(w.decimals)),
                w.paint(&f.paint)
            );
            w.line(&s);
        }
        w.line("</g>");
    }

    if !scene.nodes.is_empty() {
        w.line(r#"<g id="nodes">"#);
        for n in &scene.nodes {
            let s = format!(
                r#"<circle class="node" data-id="{}" data-value="{}" cx="{}" cy="{}" r="{}" {}/>"#,
                escape(&n.id),
                data_number(n.value),
                w.num(n.center.x),
                w.num(n.center.y),
                w.num(n.radius),
                w.paint(&n.paint)
            );
            w.line(&s);
        }
        w.line("</g>");
    }

    if !scene.legends.is_empty() {
        w.line(r#"<g id="legends">"#);
        for legend in &scene.legends {
            write_legend(&mut w, legend);
        }
        w.line("</g>");
    }

    let e = &scene.elements;
    if e.title.is_some() || e.north_arrow.is_some() || e.projection_label.is_some() || !e.labels.is_empty() {
        w.line(r#"<g id="map-elements">"#);
        if let Some(t) = &e.title {
            w.text("title", t);
        }
        if let Some((at, size)) = e.north_arrow {
            let (half, base) = (size * 0.3, size * 0.75);
            let d = format!(
                "M{} L{} L{} L{} Z",
                w.pt(at),
                w.pt(Point::new(at.x + half, at.y + size)),
                w.pt(Point::new(at.x, at.y + base)),
                w.pt(Point::new(at.x - half, at.y + size))
            );
            w.line(r#"<g class="north-arrow">"#);
            w.line(&format!(r##"<path d="{d}" fill="#222222"/>"##));
            w.line(&format!(
                r##"<text x="{}" y="{}" font-size="12" text-anchor="middle" fill="#222222">N</text>"##,
                w.num(at.x),
                w.num(at.y - 4.0)
            ));
            w.line("</g>");
        }
        if let Some(t) = &e.projection_label {
            w.text("projection-label", t);
        }
        for t in &e.labels {
            w.text("label", t);
        }
        w.line("</g>");
    }

    w.line("</svg>");
    w.out
}

fn write_legend(w: &mut Writer, legend: &Legend) {
    let s = format!(
        r#"<g class="legend" data-layer="{}" data-kind="{}" transform="translate({})">"#,
        legend.layer.name(),
        if legend.classified { "classified" } else { "proportional" },
        w.pt(legend.origin)
    );
    w.line(&s);
    w.line(&format!(
        r#"<text class="legend-title" x="0" y="14" font-size="12" font-weight="bold">{}</text>"#,
        escape(&legend.title)
    ));
    let column = legend.glyph_column();
    let mut y = 20.0;
    for entry in &legend.entries {
        let h = Legend::row_height(entry);
        let cy = y + h / 2.0;
        let glyph = match entry.glyph {
            Glyph::Line { width, color } => format!(
                r#"<rect class="legend-glyph" x="0" y="{}" width="{}" height="{}" fill="{color}"/>"#,
                w.num(cy - width / 2.0),
                w.num(column),
                w.num(width)
            ),
            Glyph::Circle { radius, fill, stroke } => format!(
                r#"<circle class="legend-glyph" cx="{}" cy="{}" r="{}" fill="{fill}" stroke="{stroke}"/>"#,
                w.num(column / 2.0),
                w.num(cy),
                w.num(radius)
            ),
            Glyph::Swatch { fill } => format!(
                r##"<rect class="legend-glyph" x="0" y="{}" width="18" height="13.5" fill="{fill}" stroke="#666666" stroke-width="0.5"/>"##,
                w.num(cy - 6.75)
            ),
        };
        w.line(&glyph);
        w.line(&format!(
            r#"<text class="legend-label" x="{}" y="{}" font-size="11">{}</text>"#,
            w.num(column + 10.0),
            w.num(cy + 4.0),
            escape(&entry.label)
        ));
        y += h;
    }
    w.line("</g>");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Rgb;

    #[test]
    fn empty_scene_has_only_background() {
        let svg = to_svg(&SceneDocument::empty(100, 50, Rgb(0xAA, 0xBB, 0xCC)), 3);
        assert!(svg.contains(r##"<rect class="background" x="0" y="0" width="100" height="50" fill="#aabbcc""##));
        assert_eq!(svg.matches('<').count(), 4);
    }

    #[test]
    fn escaping() {
        assert_eq!(escape(r#"a<b & "c""#), "a&lt;b &amp; &quot;c&quot;");
    }
}
