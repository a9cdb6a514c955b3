//! Closed flow symbols between two node circles, in screen pixels (y down).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::numeric::format_decimal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlowStyle {
    #[default]
    CurveHalfArrow,
    StraightHalfArrow,
    Tapered,
    Teardrop,
}

impl FlowStyle {
    pub fn name(self) -> &'static str {
        match self {
            FlowStyle::CurveHalfArrow => "curve_half_arrow",
            FlowStyle::StraightHalfArrow => "straight_half_arrow",
            FlowStyle::Tapered => "tapered",
            FlowStyle::Teardrop => "teardrop",
        }
    }
}

/// Side of the origin-destination axis a flow is drawn on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrafficRule {
    #[default]
    Right,
    Left,
}

/// `Fidelity` keeps the reference construction as written, including a
/// zero y-gap on sloped flows and a fixed 2.5 arrow multiplier for
/// left-hand traffic. `Corrected` uses the computed gap and the band
/// multiplier on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathMode {
    #[default]
    Fidelity,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    fn translate(self, dx: f64, dy: f64) -> Point {
        Point::new(self.x + dx, self.y + dy)
    }
}

/// Half-arrow length multiplier and width for a flow width band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrowConstants {
    pub arrow_len: f64,
    pub arrow_width: f64,
}

pub fn arrow_constants(w: f64) -> ArrowConstants {
    let (arrow_len, factor) = if w >= 10.0 {
        (2.42, 1.1)
    } else if w >= 8.0 {
        (2.64, 1.2)
    } else if w >= 6.0 {
        (3.08, 1.4)
    } else if w >= 4.0 {
        (4.4, 2.0)
    } else if w >= 3.0 {
        (6.6, 3.0)
    } else if w >= 2.0 {
        (8.8, 4.0)
    } else {
        (11.0, 5.0)
    };
    ArrowConstants { arrow_len, arrow_width: w * factor }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PathCommand {
    MoveTo(Point),
    LineTo(Point),
    CubicTo(Point, Point, Point),
}

impl PathCommand {
    pub fn end(&self) -> Point {
        match *self {
            PathCommand::MoveTo(p) | PathCommand::LineTo(p) | PathCommand::CubicTo(_, _, p) => p,
        }
    }

    pub fn points(&self) -> Vec<Point> {
        match *self {
            PathCommand::MoveTo(p) | PathCommand::LineTo(p) => vec![p],
            PathCommand::CubicTo(a, b, c) => vec![a, b, c],
        }
    }
}

/// Construction points of a symbol. P0 and P3 are the clipped and offset
/// endpoints; P1 and P2 the shaft corners; EP3 the arrow elbow. The `C1`
/// controls belong to the outer curve, the `C2` controls to the inner one.
/// `cp2_tapered` is the outer second control used by the tapered styles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathPoints {
    pub p0: Point,
    pub p1: Point,
    pub p2: Point,
    pub p3: Point,
    pub ep3: Point,
    pub cp1_c1: Point,
    pub cp2_c1: Point,
    pub cp1_c2: Point,
    pub cp2_c2: Point,
    pub cp2_tapered: Point,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathSpec {
    pub style: FlowStyle,
    pub commands: Vec<PathCommand>,
    pub closed: bool,
    pub points: PathPoints,
}

impl PathSpec {
    /// SVG path data. `None` prints full precision, otherwise values are
    /// rounded half-up with trailing zeros trimmed.
    pub fn to_path_data(&self, decimals: Option<usize>) -> String {
        let num = |v: f64| match decimals {
            Some(d) => format_decimal(v, d, true),
            None => format!("{v}"),
        };
        let pt = |p: Point| format!("{},{}", num(p.x), num(p.y));
        let mut out = String::new();
        for (i, cmd) in self.commands.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = match *cmd {
                PathCommand::MoveTo(p) => write!(out, "M{}", pt(p)),
                PathCommand::LineTo(p) => write!(out, "L{}", pt(p)),
                PathCommand::CubicTo(a, b, c) => write!(out, "C{} {} {}", pt(a), pt(b), pt(c)),
            };
        }
        out
    }

    pub fn start(&self) -> Point {
        self.commands[0].end()
    }

    pub fn end(&self) -> Point {
        self.commands[self.commands.len() - 1].end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowPathInput {
    pub origin: Point,
    pub dest: Point,
    pub width: f64,
    pub source_radius: f64,
    pub target_radius: f64,
    pub rule: TrafficRule,
    pub mode: PathMode,
}

impl FlowPathInput {
    pub fn new(origin: Point, dest: Point, width: f64, source_radius: f64, target_radius: f64) -> Self {
        FlowPathInput { origin, dest, width, source_radius, target_radius, rule: TrafficRule::Right, mode: PathMode::Fidelity }
    }

    pub fn with_rule(mut self, rule: TrafficRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn with_mode(mut self, mode: PathMode) -> Self {
        self.mode = mode;
        self
    }

    fn reversed(self) -> Self {
        FlowPathInput {
            origin: self.dest,
            dest: self.origin,
            source_radius: self.target_radius,
            target_radius: self.source_radius,
            ..self
        }
    }
}

/// Builds the closed symbol, or `None` when the circles are too close
/// (center distance below 1.2 times the summed radii), the centers
/// coincide, or the width is not positive.
pub fn flow_path(style: FlowStyle, input: &FlowPathInput) -> Option<PathSpec> {
    use PathCommand::*;
    if style == FlowStyle::Teardrop {
        let pts = construct(&input.reversed())?;
        let commands = vec![
            MoveTo(pts.p0),
            CubicTo(pts.cp1_c1, pts.cp2_tapered, pts.p3),
            CubicTo(pts.cp1_c2, pts.cp2_c2, pts.p0),
        ];
        return Some(PathSpec { style, commands, closed: true, points: pts });
    }
    let pts = construct(input)?;
    let commands = match style {
        FlowStyle::CurveHalfArrow => vec![
            MoveTo(pts.p0),
            LineTo(pts.p1),
            CubicTo(pts.cp1_c1, pts.cp2_c1, pts.p2),
            LineTo(pts.ep3),
            LineTo(pts.p3),
            CubicTo(pts.cp1_c2, pts.cp2_c2, pts.p0),
        ],
        FlowStyle::StraightHalfArrow => vec![
            MoveTo(pts.p0),
            LineTo(pts.p1),
            LineTo(pts.p2),
            LineTo(pts.ep3),
            LineTo(pts.p3),
            LineTo(pts.p0),
        ],
        FlowStyle::Tapered => vec![
            MoveTo(pts.p0),
            LineTo(pts.p1),
            CubicTo(pts.cp1_c1, pts.cp2_tapered, pts.p3),
            CubicTo(pts.cp1_c2, pts.cp2_c2, pts.p0),
        ],
        FlowStyle::Teardrop => unreachable!(),
    };
    Some(PathSpec { style, commands, closed: true, points: pts })
}

fn construct(input: &FlowPathInput) -> Option<PathPoints> {
    let w = input.width;
    if !(w > 0.0) {
        return None;
    }
    let ArrowConstants { arrow_len, arrow_width } = arrow_constants(w);
    let (r0, r3) = (input.source_radius, input.target_radius);
    let (mut x0, mut y0) = (input.origin.x, input.origin.y);
    let (mut x3, mut y3) = (input.dest.x, input.dest.y);

    let len = (x3 - x0).hypot(y3 - y0);
    if len < (r0 + r3) * 1.2 || len == 0.0 || !len.is_finite() {
        return None;
    }

    // Clip to the circle edges. The second clip measures from the
    // already-moved origin.
    x0 += (x3 - x0) * r0 / len;
    y0 += (y3 - y0) * r0 / len;
    x3 -= (x3 - x0) * r3 / (len - r0);
    y3 -= (y3 - y0) * r3 / (len - r0);

    let gap = w * 0.05;
    let mut sign = -1.0;
    let (xdelta, ydelta, xarrow, yarrow, xgap, ygap);
    if y0 == y3 {
        (xdelta, ydelta, xarrow, yarrow, xgap, ygap) = (0.0, w / 2.0, 0.0, arrow_width, 0.0, gap);
    } else if x0 == x3 {
        (xdelta, ydelta, xarrow, yarrow, xgap, ygap) = (w / 2.0, 0.0, arrow_width, 0.0, gap, 0.0);
    } else {
        let v = (x3 - x0) / (y0 - y3);
        let norm = (1.0 + v * v).sqrt();
        xdelta = w / 2.0 / norm;
        ydelta = (xdelta * v).abs();
        xarrow = arrow_width / norm;
        yarrow = (xarrow * v).abs();
        xgap = gap / norm;
        ygap = match input.mode {
            PathMode::Fidelity => 0.0,
            PathMode::Corrected => (xgap * v).abs(),
        };
        if v < 0.0 {
            sign = 1.0;
        }
    }

    // Offset both ends off the axis; the y shift reads the new x values.
    let up = y0 > y3;
    x0 = if up { x0 + xgap } else { x0 - xgap };
    x3 = if up { x3 + xgap } else { x3 - xgap };
    let leftward = x0 > x3;
    y0 = if leftward { y0 - ygap } else { y0 + ygap };
    y3 = if leftward { y3 - ygap } else { y3 + ygap };

    let (sx, sy, k) = match input.rule {
        TrafficRule::Right => (if y0 > y3 { 1.0 } else { -1.0 }, if x0 > x3 { -1.0 } else { 1.0 }, arrow_len),
        TrafficRule::Left => {
            let k = match input.mode {
                PathMode::Fidelity => 2.5,
                PathMode::Corrected => arrow_len,
            };
            (if y0 < y3 { 1.0 } else { -1.0 }, if x0 < x3 { -1.0 } else { 1.0 }, k)
        }
    };

    let p0 = Point::new(x0, y0);
    let p3 = Point::new(x3, y3);
    let p1 = p0.translate(sx * (xdelta / 2.0), sy * (ydelta / 2.0));
    let p2 = p3.translate(sx * (xdelta + k * ydelta * sign), sy * (ydelta - k * xdelta * sign));
    let ep3 = p3.translate(sx * (xarrow + k * ydelta * sign), sy * (yarrow - k * xdelta * sign));

    let third = p0.translate((x3 - x0) / 3.0, (y3 - y0) / 3.0);
    let from_dest = p3.translate((x0 - x3) / 3.0, (y0 - y3) / 3.0);
    let (arcx, arcy) = (xdelta * len / 4.0 / w, ydelta * len / 4.0 / w);
    let (outx, outy) = (arcx + xdelta, arcy + ydelta);

    Some(PathPoints {
        p0,
        p1,
        p2,
        p3,
        ep3,
        cp1_c1: p0.translate(sx * outx, sy * outy),
        cp2_c1: third.translate(sx * outx, sy * outy),
        cp1_c2: third.translate(sx * arcx, sy * arcy),
        cp2_c2: p0.translate(sx * arcx, sy * arcy),
        cp2_tapered: from_dest.translate(sx * outx, sy * outy),
    })
}
