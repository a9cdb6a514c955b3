//! The four flow symbol styles under both traffic rules, written as a
//! small SVG gallery.
//!
//! `cargo run -p odflow --example flow_paths [out.svg]`

use std::fmt::Write as _;
use std::path::PathBuf;

use odflow::geometry::{arrow_constants, flow_path, FlowPathInput, FlowStyle, Point, TrafficRule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let styles = [FlowStyle::CurveHalfArrow, FlowStyle::StraightHalfArrow, FlowStyle::Tapered, FlowStyle::Teardrop];
    let mut svg = String::from(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="880" height="420" viewBox="0 0 880 420">
<rect width="880" height="420" fill="white"/>
"#,
    );
    for (col, style) in styles.iter().enumerate() {
        for (row, rule) in [TrafficRule::Right, TrafficRule::Left].into_iter().enumerate() {
            let x0 = 30.0 + 215.0 * col as f64;
            let y0 = 60.0 + 200.0 * row as f64;
            let (a, b) = (Point::new(x0, y0 + 120.0), Point::new(x0 + 170.0, y0));
            for (origin, dest, fill) in [(a, b, "#2b8cbe"), (b, a, "#e34a33")] {
                let input = FlowPathInput::new(origin, dest, 8.0, 6.0, 6.0).with_rule(rule);
                if let Some(path) = flow_path(*style, &input) {
                    writeln!(svg, r#"<path d="{}" fill="{fill}" fill-opacity="0.85"/>"#, path.to_path_data(Some(2)))?;
                }
            }
            for p in [a, b] {
                writeln!(svg, r##"<circle cx="{}" cy="{}" r="6" fill="#444"/>"##, p.x, p.y)?;
            }
            writeln!(svg, r#"<text x="{x0}" y="{}" font-size="12">{} ({rule:?})</text>"#, y0 - 30.0, style.name())?;
        }
    }
    svg.push_str("</svg>\n");

    for w in [1.0, 3.0, 6.0, 12.0] {
        let c = arrow_constants(w);
        println!("width {w:>4}: arrow length {:>5.2}, arrow width {:>5.2}", c.arrow_len, c.arrow_width);
    }
    let out = std::env::args().nth(1).map_or_else(|| std::env::temp_dir().join("flow_paths.svg"), PathBuf::from);
    std::fs::write(&out, svg)?;
    println!("wrote {}", out.display());
    Ok(())
}
