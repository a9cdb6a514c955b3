//! Class breaks by equal interval, quantile, Jenks and manual limits, with
//! the matching color scheme.
//!
//! `cargo run -p odflow --example classify_breaks`

use odflow::classify::{classify, scheme_colors, ClassMethod};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let values = [
        4.0, 5.5, 6.1, 7.0, 12.0, 13.5, 14.0, 15.2, 31.0, 33.0, 35.5, 70.0, 72.0, 98.0, 101.0, 140.0,
    ];
    let k = 4;
    let colors = scheme_colors("YlGnBu", k)?;
    let manual = [10.0, 50.0, 100.0];
    for method in [ClassMethod::EqualInterval, ClassMethod::Quantile, ClassMethod::Jenks, ClassMethod::Manual] {
        let breaks = (method == ClassMethod::Manual).then_some(&manual[..]);
        let c = classify(&values, method, k, breaks)?;
        println!("{method:?}: breaks {:?}, counts {:?}", c.breaks, c.counts(&values));
        for (class, color) in colors.iter().enumerate().take(c.classes()) {
            let (lo, hi) = c.bounds(class);
            println!("  class {class}: {lo:>7.2} .. {hi:>7.2}  {color}");
        }
    }
    Ok(())
}
