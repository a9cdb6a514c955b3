#![allow(clippy::needless_range_loop)]

//! Acceptance gate. Prints one PASS/FAIL line per criterion, then fails if
//! any criterion failed.

mod common;

use std::time::{Duration, Instant};

use odflow::analytics::{expected_flows, modularity_transform, node_stats, NodeStats, NullModel, EARTH_RADIUS_KM};
use odflow::classify::{classify, ClassMethod};
use odflow::geometry::{arrow_constants, flow_path, FlowPathInput, FlowStyle, Point, ProjectionSpec, TrafficRule};
use odflow::geometry::AlbersPreset;
use odflow::ingest::polygon_centroid;
use odflow::scene::render_project;
use odflow::shell::ServiceConfig;
use odflow::{FlowNetwork, FlowRecord, NodeRecord, Polygon, ProjectFile};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;

const STAT_TOL: f64 = 1e-6;
const PATH_TOL: f64 = 1e-9;
const GRAVITY_TOL: f64 = 1e-6;
const CONSERVE_TOL: f64 = 1e-9;
const JENKS_TOL: f64 = 1e-9;
const ROUND_TRIP_TOL: f64 = 1e-9;
const JACOBIAN_TOL: f64 = 1e-6;
const ROBINSON_TOL: f64 = 1e-9;
const CENTROID_TOL: f64 = 1e-12;

struct Gate {
    lines: Vec<(bool, String)>,
}

impl Gate {
    fn check(&mut self, name: &str, pass: bool, detail: String) {
        let line = format!("[{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
        println!("{line}");
        self.lines.push((pass, line));
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

// ---------------------------------------------------------------- banana

/// Published per-country table: id, imports, exports, net, total, ratio.
const BANANA_TABLE: [(&str, f64, f64, f64, f64, f64); 9] = [
    ("19", 0.0, 109258.0, -109258.0, 109258.0, -1.0),
    ("58", 0.0, 476001.0, -476001.0, 476001.0, -1.0),
    ("21", 17.0, 57004.0, -56987.0, 57021.0, -0.999403728),
    ("169", 64.0, 66730.0, -66666.0, 66794.0, -0.99808366),
    ("170", 3.0, 449.0, -446.0, 452.0, -0.986725664),
    ("44", 1860.0, 2729.0, -869.0, 4589.0, -0.189365875),
    ("9", 433273.0, 0.0, 433273.0, 433273.0, 1.0),
    ("40", 245634.0, 1.0, 245633.0, 245635.0, 0.999991858),
    ("234", 50857.0, 0.0, 50857.0, 50857.0, 1.0),
];

fn stats_match(s: &NodeStats, row: &(&str, f64, f64, f64, f64, f64)) -> bool {
    (s.net - row.3).abs() <= STAT_TOL && (s.gross - row.4).abs() <= STAT_TOL && (s.net_ratio - row.5).abs() <= STAT_TOL
}

fn banana_statistics(gate: &mut Gate) {
    let ((stats, matched), elapsed) = timed(|| {
        let network = banana_network();
        let stats = node_stats(&network, None).unwrap();
        let matched: Vec<&str> = BANANA_TABLE
            .iter()
            .filter(|row| stats.iter().find(|s| s.id == row.0).is_some_and(|s| stats_match(s, row)))
            .map(|row| row.0)
            .collect();
        (stats, matched)
    });
    let brazil = stats.iter().find(|s| s.id == "21").unwrap();
    gate.check(
        "banana statistics from node and flow tables",
        matched.len() == 9 && elapsed < Duration::from_secs(1),
        format!(
            "{}/9 countries reproduce net/total/ratio (matched ids {:?}); Brazil gives {} / {} / {:.9}; {:?}",
            matched.len(),
            matched,
            brazil.net,
            brazil.gross,
            brazil.net_ratio,
            elapsed
        ),
    );

    let ok = BANANA_TABLE.iter().all(|row| stats_match(&NodeStats::from_totals(row.0, row.1, row.2), row));
    gate.check(
        "banana statistics from published import/export totals",
        ok,
        "net, total and ratio recomputed from imports and exports for all 9 countries".into(),
    )
}

// ------------------------------------------------------ flow path oracle

/// Line-by-line transcription of the reference half-arrow routine, with
/// its `null` initialisers kept as `None` (coerced to 0 when used in
/// arithmetic, as the original runtime does). Returns the 10 path points in
/// output order, or `None` where the routine returns early.
#[allow(clippy::too_many_arguments, clippy::manual_range_contains)]
fn draw_curve(
    mut x0: f64,
    mut y0: f64,
    mut x3: f64,
    mut y3: f64,
    flow_size: f64,
    source_radius: f64,
    target_radius: f64,
    righthandrul: bool,
) -> Option<[(f64, f64); 10]> {
    fn js(v: Option<f64>) -> f64 {
        v.unwrap_or(0.0)
    }
    let mut arrowlen = 2.42;
    let mut arrowwidthconstant = flow_size * 1.1;
    if flow_size < 10.0 && flow_size >= 8.0 {
        arrowlen = 2.64;
        arrowwidthconstant = flow_size * 1.2;
    } else if flow_size < 8.0 && flow_size >= 6.0 {
        arrowlen = 3.08;
        arrowwidthconstant = flow_size * 1.4;
    } else if flow_size < 6.0 && flow_size >= 4.0 {
        arrowlen = 4.4;
        arrowwidthconstant = flow_size * 2.0;
    } else if flow_size < 4.0 && flow_size >= 3.0 {
        arrowlen = 6.6;
        arrowwidthconstant = flow_size * 3.0;
    } else if flow_size < 3.0 && flow_size >= 2.0 {
        arrowlen = 8.8;
        arrowwidthconstant = flow_size * 4.0;
    } else if flow_size < 2.0 {
        arrowlen = 11.0;
        arrowwidthconstant = flow_size * 5.0;
    }

    let ndsize0 = source_radius;
    let ndsize3 = target_radius;
    let dx = (x3 - x0).abs();
    let dy = (y3 - y0).abs();
    let len = (dx * dx + dy * dy).sqrt();
    if len < (ndsize0 + ndsize3) * 1.2 {
        return None;
    }
    x0 = x0 + (x3 - x0) * ndsize0 / len;
    y0 = y0 + (y3 - y0) * ndsize0 / len;
    x3 = x3 - (x3 - x0) * ndsize3 / (len - ndsize0);
    y3 = y3 - (y3 - y0) * ndsize3 / (len - ndsize0);

    let mut sign = -1.0;
    let (xdelta, ydelta, xarrowdelta, yarrowdelta, xgap, ygap): (f64, f64, f64, f64, Option<f64>, Option<f64>);
    let gap = flow_size * 0.05;
    if y0 == y3 {
        xdelta = 0.0;
        ydelta = flow_size / 2.0;
        xarrowdelta = 0.0;
        yarrowdelta = arrowwidthconstant / 1.0;
        xgap = Some(0.0);
        ygap = Some(gap);
    } else if x0 == x3 {
        ydelta = 0.0;
        xdelta = flow_size / 2.0;
        yarrowdelta = 0.0;
        xarrowdelta = arrowwidthconstant / 1.0;
        xgap = Some(gap);
        ygap = Some(0.0);
    } else {
        let v = (x3 - x0) / (y0 - y3);
        xdelta = flow_size / 2.0 / (1.0 + v * v).sqrt();
        ydelta = (xdelta * v).abs();
        xarrowdelta = arrowwidthconstant / (1.0 + v * v).sqrt();
        yarrowdelta = (xarrowdelta * v).abs();
        xgap = Some(gap / (1.0 + v * v).sqrt());
        let ygap_before: Option<f64> = None;
        ygap = Some((js(ygap_before) * v).abs());
        if v < 0.0 {
            sign = 1.0;
        }
    }
    x0 = if y0 > y3 { x0 + js(xgap) } else { x0 - js(xgap) };
    x3 = if y0 > y3 { x3 + js(xgap) } else { x3 - js(xgap) };
    y0 = if x0 > x3 { y0 - js(ygap) } else { y0 + js(ygap) };
    y3 = if x0 > x3 { y3 - js(ygap) } else { y3 + js(ygap) };

    let (xc1, yc1, xc2, yc2, x3elbow1, y3elbow1);
    let (x13rd, y13rd, x23rd, y23rd, xc13rd, yc13rd, xc23rd, yc23rd);
    if righthandrul {
        xc1 = if y0 > y3 { x0 + xdelta / 2.0 } else { x0 - xdelta / 2.0 };
        yc1 = if x0 > x3 { y0 - ydelta / 2.0 } else { y0 + ydelta / 2.0 };
        yc2 = if x0 > x3 { y3 - ydelta + arrowlen * xdelta * sign } else { y3 + ydelta - arrowlen * xdelta * sign };
        xc2 = if y0 > y3 { x3 + xdelta + arrowlen * ydelta * sign } else { x3 - xdelta - arrowlen * ydelta * sign };
        x3elbow1 =
            if y0 > y3 { x3 + xarrowdelta + arrowlen * ydelta * sign } else { x3 - xarrowdelta - arrowlen * ydelta * sign };
        y3elbow1 =
            if x0 > x3 { y3 - yarrowdelta + arrowlen * xdelta * sign } else { y3 + yarrowdelta - arrowlen * xdelta * sign };
        let mut arcxdelta = xdelta * len / 4.0 / flow_size;
        let mut arcydelta = ydelta * len / 4.0 / flow_size;
        x13rd = if y0 > y3 { x0 + arcxdelta } else { x0 - arcxdelta };
        y13rd = if x0 > x3 { y0 - arcydelta } else { y0 + arcydelta };
        x23rd = if y0 > y3 { x0 + (x3 - x0) / 3.0 + arcxdelta } else { x0 + (x3 - x0) / 3.0 - arcxdelta };
        y23rd = if x0 > x3 { y0 + (y3 - y0) / 3.0 - arcydelta } else { y0 + (y3 - y0) / 3.0 + arcydelta };
        arcxdelta += xdelta;
        arcydelta += ydelta;
        xc13rd = if y0 > y3 { x0 + arcxdelta } else { x0 - arcxdelta };
        yc13rd = if x0 > x3 { y0 - arcydelta } else { y0 + arcydelta };
        xc23rd = if y0 > y3 { x0 + (x3 - x0) / 3.0 + arcxdelta } else { x0 + (x3 - x0) / 3.0 - arcxdelta };
        yc23rd = if x0 > x3 { y0 + (y3 - y0) / 3.0 - arcydelta } else { y0 + (y3 - y0) / 3.0 + arcydelta };
    } else {
        xc1 = if y0 < y3 { x0 + xdelta / 2.0 } else { x0 - xdelta / 2.0 };
        yc1 = if x0 < x3 { y0 - ydelta / 2.0 } else { y0 + ydelta / 2.0 };
        yc2 = if x0 < x3 { y3 - ydelta + 2.5 * xdelta * sign } else { y3 + ydelta - 2.5 * xdelta * sign };
        xc2 = if y0 < y3 { x3 + xdelta + 2.5 * ydelta * sign } else { x3 - xdelta - 2.5 * ydelta * sign };
        x3elbow1 = if y0 < y3 { x3 + xarrowdelta + 2.5 * ydelta * sign } else { x3 - xarrowdelta - 2.5 * ydelta * sign };
        y3elbow1 = if x0 < x3 { y3 - yarrowdelta + 2.5 * xdelta * sign } else { y3 + yarrowdelta - 2.5 * xdelta * sign };
        let mut arcxdelta = xdelta * len / 4.0 / flow_size;
        let mut arcydelta = ydelta * len / 4.0 / flow_size;
        x13rd = if y0 < y3 { x0 + arcxdelta } else { x0 - arcxdelta };
        y13rd = if x0 < x3 { y0 - arcydelta } else { y0 + arcydelta };
        x23rd = if y0 < y3 { x0 + (x3 - x0) / 3.0 + arcxdelta } else { x0 + (x3 - x0) / 3.0 - arcxdelta };
        y23rd = if x0 < x3 { y0 + (y3 - y0) / 3.0 - arcydelta } else { y0 + (y3 - y0) / 3.0 + arcydelta };
        arcxdelta += xdelta;
        arcydelta += ydelta;
        xc13rd = if y0 < y3 { x0 + arcxdelta } else { x0 - arcxdelta };
        yc13rd = if x0 < x3 { y0 - arcydelta } else { y0 + arcydelta };
        xc23rd = if y0 < y3 { x0 + (x3 - x0) / 3.0 + arcxdelta } else { x0 + (x3 - x0) / 3.0 - arcxdelta };
        yc23rd = if x0 < x3 { y0 + (y3 - y0) / 3.0 - arcydelta } else { y0 + (y3 - y0) / 3.0 + arcydelta };
    }
    // "M" x0,y0 "L" xc1,yc1 "C" xc13rd,yc13rd xc23rd,yc23rd xc2,yc2
    // "L" x3elbow1,y3elbow1 "L" x3,y3 "C" x23rd,y23rd x13rd,y13rd x0,y0
    Some([
        (x0, y0),
        (xc1, yc1),
        (xc13rd, yc13rd),
        (xc23rd, yc23rd),
        (xc2, yc2),
        (x3elbow1, y3elbow1),
        (x3, y3),
        (x23rd, y23rd),
        (x13rd, y13rd),
        (x0, y0),
    ])
}

const PROBE_WIDTHS: [f64; 14] = [0.5, 1.999, 2.0, 2.999, 3.0, 3.999, 4.0, 5.999, 6.0, 7.999, 8.0, 9.999, 10.0, 14.0];

fn table_fidelity(gate: &mut Gate) {
    let mut rng = StdRng::seed_from_u64(0xA1);
    let (result, elapsed) = timed(|| {
        let mut max_err: f64 = 0.0;
        let mut agree_on_suppression = true;
        let mut drawn = 0;
        let mut kinds = [0usize; 4];
        for case in 0..200 {
            let rule = if (case / 4) % 2 == 0 { TrafficRule::Right } else { TrafficRule::Left };
            let width = if rng.gen_bool(0.5) {
                PROBE_WIDTHS[rng.gen_range(0..PROBE_WIDTHS.len())]
            } else {
                rng.gen_range(0.3..15.0)
            };
            let (r0, r3) = (rng.gen_range(0.0..12.0), rng.gen_range(0.0..12.0));
            let kind = case % 4;
            kinds[kind] += 1;
            let (a, b) = match kind {
                0 => (
                    Point::new(rng.gen_range(0.0..900.0), rng.gen_range(0.0..600.0)),
                    Point::new(rng.gen_range(0.0..900.0), rng.gen_range(0.0..600.0)),
                ),
                1 => {
                    let y = rng.gen_range(0.0..600.0);
                    (Point::new(rng.gen_range(0.0..900.0), y), Point::new(rng.gen_range(0.0..900.0), y))
                }
                2 => {
                    let x = rng.gen_range(0.0..900.0);
                    (Point::new(x, rng.gen_range(0.0..600.0)), Point::new(x, rng.gen_range(0.0..600.0)))
                }
                _ => {
                    // Exactly on the suppression threshold, or just inside it.
                    let threshold = (r0 + r3) * 1.2;
                    let reach = if rng.gen_bool(0.5) { threshold } else { threshold * (1.0 - 1e-12) };
                    let (x, y) = (rng.gen_range(0.0..900.0), rng.gen_range(0.0..600.0));
                    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                    if rng.gen_bool(0.5) {
                        (Point::new(0.0, y), Point::new(sign * reach, y))
                    } else {
                        (Point::new(x, 0.0), Point::new(x, sign * reach))
                    }
                }
            };
            let expected = draw_curve(a.x, a.y, b.x, b.y, width, r0, r3, rule == TrafficRule::Right);
            let input = FlowPathInput::new(a, b, width, r0, r3).with_rule(rule);
            let actual = flow_path(FlowStyle::CurveHalfArrow, &input);
            match (expected, actual) {
                (None, None) => {}
                (Some(pts), Some(path)) => {
                    drawn += 1;
                    let got: Vec<Point> = path.commands.iter().flat_map(|c| c.points()).collect();
                    if got.len() != pts.len() {
                        agree_on_suppression = false;
                        continue;
                    }
                    for (g, e) in got.iter().zip(pts) {
                        max_err = max_err.max((g.x - e.0).abs()).max((g.y - e.1).abs());
                    }
                }
                (e, a) => {
                    println!("  suppression mismatch at case {case}: oracle {:?} vs path {:?}", e.is_some(), a.is_some());
                    agree_on_suppression = false;
                }
            }
        }
        (max_err, agree_on_suppression, drawn, kinds)
    });
    let (max_err, agree, drawn, kinds) = result;
    gate.check(
        "half-arrow construction matches reference transcription",
        agree && max_err <= PATH_TOL && elapsed < Duration::from_secs(5),
        format!(
            "200 cases (generic {}, horizontal {}, vertical {}, threshold {}), {drawn} drawn, max |Δ| = {max_err:e}, {:?}",
            kinds[0], kinds[1], kinds[2], kinds[3], elapsed
        ),
    );
}

fn arrow_bands(gate: &mut Gate) {
    // (lower bound, length, width factor), widest band first.
    const BANDS: [(f64, f64, f64); 7] =
        [(10.0, 2.42, 1.1), (8.0, 2.64, 1.2), (6.0, 3.08, 1.4), (4.0, 4.4, 2.0), (3.0, 6.6, 3.0), (2.0, 8.8, 4.0), (f64::NEG_INFINITY, 11.0, 5.0)];
    let mut bad = Vec::new();
    for w in PROBE_WIDTHS {
        let &(_, len, factor) = BANDS.iter().find(|b| w >= b.0).unwrap();
        let c = arrow_constants(w);
        if c.arrow_len != len || c.arrow_width != w * factor {
            bad.push(w);
        }
    }
    gate.check(
        "arrow constants across width bands",
        bad.is_empty(),
        format!("{} probe widths, mismatches {bad:?}", PROBE_WIDTHS.len()),
    );
}

// -------------------------------------------------------------- analytics

fn haversine(a: &NodeRecord, b: &NodeRecord) -> f64 {
    let (p1, p2) = (a.lat.to_radians(), b.lat.to_radians());
    let dphi = p2 - p1;
    let dlam = (b.lon - a.lon).to_radians();
    let h = (dphi / 2.0).sin().powi(2) + p1.cos() * p2.cos() * (dlam / 2.0).sin().powi(2);
    2.0 * EARTH_RADIUS_KM * h.sqrt().asin()
}

/// Plain doubly constrained balancing with inverse-power decay.
fn ipf_oracle(o: &[f64], d: &[f64], dist: &[Vec<f64>], beta: f64) -> Vec<Vec<f64>> {
    let n = o.len();
    let f = |i: usize, j: usize| if i == j { 0.0 } else { dist[i][j].powf(-beta) };
    let mut a = vec![1.0; n];
    let mut b = vec![1.0; n];
    for _ in 0..20_000 {
        for i in 0..n {
            a[i] = 1.0 / (0..n).map(|j| b[j] * d[j] * f(i, j)).sum::<f64>();
        }
        for j in 0..n {
            b[j] = 1.0 / (0..n).map(|i| a[i] * o[i] * f(i, j)).sum::<f64>();
        }
    }
    (0..n).map(|i| (0..n).map(|j| a[i] * o[i] * b[j] * d[j] * f(i, j)).collect()).collect()
}

fn gravity_model(gate: &mut Gate) {
    let mut rng = StdRng::seed_from_u64(0x6A);
    let ids = ["N1", "N2", "N3", "N4", "N5", "N6"];
    let nodes: Vec<NodeRecord> =
        ids.iter().map(|id| NodeRecord::new(*id, rng.gen_range(-20.0..40.0), rng.gen_range(-30.0..50.0))).collect();
    let mut flows = Vec::new();
    for (i, o) in ids.iter().enumerate() {
        for (j, d) in ids.iter().enumerate() {
            if i != j {
                flows.push(FlowRecord::new(*o, *d, rng.gen_range(1.0..500.0)));
            }
        }
    }
    let network = FlowNetwork::build(nodes.clone(), flows).unwrap();
    let (out, inn) = (network.out_strengths().to_vec(), network.in_strengths().to_vec());
    let e = expected_flows(&network, &NullModel::Gravity(Default::default()), None).unwrap();
    let n = ids.len();
    let marginal_err = (0..n)
        .map(|i| ((e.row_sum(i) - out[i]) / out[i]).abs().max(((e.col_sum(i) - inn[i]) / inn[i]).abs()))
        .fold(0.0, f64::max);
    let dist: Vec<Vec<f64>> = nodes.iter().map(|a| nodes.iter().map(|b| haversine(a, b)).collect()).collect();
    let oracle = ipf_oracle(&out, &inn, &dist, 2.0);
    let mut oracle_err: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                oracle_err = oracle_err.max(((e.get(i, j) - oracle[i][j]) / oracle[i][j]).abs());
            }
        }
    }
    gate.check(
        "gravity model balances six great-circle nodes",
        e.iterations <= 500 && marginal_err < GRAVITY_TOL && oracle_err < GRAVITY_TOL,
        format!("{} iterations, max relative marginal error {marginal_err:e}, max relative deviation from independent balancing {oracle_err:e}", e.iterations),
    );

    let two = FlowNetwork::build(
        vec![NodeRecord::new("P", 0.0, 0.0), NodeRecord::new("Q", 10.0, 5.0)],
        vec![FlowRecord::new("P", "Q", 7.0), FlowRecord::new("Q", "P", 3.0)],
    )
    .unwrap();
    let e2 = expected_flows(&two, &NullModel::Gravity(Default::default()), None).unwrap();
    gate.check(
        "gravity model two-node forced case",
        e2.get(0, 1) == 7.0 && e2.get(1, 0) == 3.0,
        format!("E(P,Q) = {}, E(Q,P) = {}", e2.get(0, 1), e2.get(1, 0)),
    );
}

fn adjusted_model(gate: &mut Gate) {
    let four = four_flows();
    let paper = expected_flows(&four, &NullModel::AdjustedPaper, None).unwrap();
    // F_O(A)=5, F_D(B)=4, f(A,B)=4, F_S=10, Σ F_out·F_in = 5·5 + 2·4 + 3·1.
    let oracle: f64 = 5.0 * 4.0 * 4.0 / (10.0 * 10.0 - (5.0 * 5.0 + 2.0 * 4.0 + 3.0 * 1.0));
    let (a, b) = (four.node_index("A").unwrap(), four.node_index("B").unwrap());
    gate.check(
        "adjusted model expectation on four-flow instance",
        paper.get(a, b) == 1.25 && (oracle - 1.25).abs() < 1e-15,
        format!("E(A,B) = {} (independent evaluation {oracle})", paper.get(a, b)),
    );

    let conserving = expected_flows(&four, &NullModel::AdjustedConserving, None).unwrap();
    let gap = (conserving.total() - four.total()).abs();
    gate.check(
        "conserving adjusted model preserves total volume",
        gap <= CONSERVE_TOL,
        format!("Σ E = {}, F_S = {}, |Δ| = {gap:e}", conserving.total(), four.total()),
    );

    // Uniform complete network: the conserving expectation equals each flow.
    let ids = ["A", "B", "C", "D"];
    let uniform: Vec<(&str, &str, f64)> =
        ids.iter().flat_map(|o| ids.iter().filter(move |d| *d != o).map(move |d| (*o, *d, 5.0))).collect();
    let net = network(&uniform);
    let e = expected_flows(&net, &NullModel::AdjustedConserving, None).unwrap();
    let modularity = modularity_transform(&net, &e).unwrap();
    let worst = modularity.iter().map(|r| r.value.abs()).fold(0.0, f64::max);
    gate.check(
        "modularity vanishes when observed equals expected",
        modularity.len() == 12 && worst == 0.0,
        format!("{} pairs, max |modularity| = {worst}", modularity.len()),
    );
}

// ---------------------------------------------------------- classification

fn sdcm(groups: &[&[f64]]) -> f64 {
    groups
        .iter()
        .map(|g| {
            let mean = g.iter().sum::<f64>() / g.len() as f64;
            g.iter().map(|v| (v - mean).powi(2)).sum::<f64>()
        })
        .sum()
}

/// Minimum SDCM over every split of sorted `values` into `k` runs.
fn brute_force_sdcm(sorted: &[f64], k: usize) -> f64 {
    fn go(rest: &[f64], k: usize, acc: &mut Vec<Vec<f64>>, best: &mut f64) {
        if k == 1 {
            acc.push(rest.to_vec());
            let groups: Vec<&[f64]> = acc.iter().map(|g| g.as_slice()).collect();
            *best = best.min(sdcm(&groups));
            acc.pop();
            return;
        }
        for cut in 1..=rest.len() - (k - 1) {
            acc.push(rest[..cut].to_vec());
            go(&rest[cut..], k - 1, acc, best);
            acc.pop();
        }
    }
    let mut best = f64::INFINITY;
    go(sorted, k, &mut Vec::new(), &mut best);
    best
}

fn jenks_optimality(gate: &mut Gate) {
    let mut rng = StdRng::seed_from_u64(0x7E);
    let (worst, elapsed) = timed(|| {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let k = rng.gen_range(2..=4);
            let n = rng.gen_range(k..=12);
            let mut values: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..100.0)).collect();
            values.sort_by(f64::total_cmp);
            values.dedup();
            if values.len() < k {
                continue;
            }
            let c = classify(&values, ClassMethod::Jenks, k, None).unwrap();
            let mut groups: Vec<Vec<f64>> = vec![Vec::new(); c.classes()];
            for &v in &values {
                groups[c.assign(v)].push(v);
            }
            let groups: Vec<&[f64]> = groups.iter().filter(|g| !g.is_empty()).map(|g| g.as_slice()).collect();
            let best = brute_force_sdcm(&values, k);
            let rel = if groups.len() == k { (sdcm(&groups) - best).abs() / best.max(1.0) } else { f64::INFINITY };
            worst = worst.max(rel);
        }
        worst
    });
    gate.check(
        "natural breaks are optimal",
        worst <= JENKS_TOL && elapsed < Duration::from_secs(10),
        format!("100 random instances (n ≤ 12, k ≤ 4), max relative SDCM excess {worst:e}, {:?}", elapsed),
    );
}

// ------------------------------------------------------------ projections

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(std::f64::consts::TAU);
    d.min(std::f64::consts::TAU - d)
}

const ROBINSON_ORACLE: [(f64, f64); 19] = [
    (1.0000, 0.0000), (0.9986, 0.0620), (0.9954, 0.1240), (0.9900, 0.1860), (0.9822, 0.2480),
    (0.9730, 0.3100), (0.9600, 0.3720), (0.9427, 0.4340), (0.9216, 0.4958), (0.8962, 0.5571),
    (0.8679, 0.6176), (0.8350, 0.6769), (0.7986, 0.7346), (0.7597, 0.7903), (0.7186, 0.8435),
    (0.6732, 0.8936), (0.6213, 0.9394), (0.5722, 0.9761), (0.5322, 1.0000),
];

fn robinson_oracle(lon: f64, lat: f64) -> (f64, f64) {
    let pos = lat.abs() / 5.0;
    let i = (pos as usize).min(17);
    let t = pos - i as f64;
    let (a, b) = (ROBINSON_ORACLE[i], ROBINSON_ORACLE[i + 1]);
    let plen = a.0 + t * (b.0 - a.0);
    let pdfe = a.1 + t * (b.1 - a.1);
    (0.8487 * plen * lon.to_radians(), 1.3523 * pdfe * lat.signum())
}

fn projections(gate: &mut Gate) {
    let mut specs = vec![ProjectionSpec::Mercator];
    specs.extend(AlbersPreset::all().iter().map(|&preset| ProjectionSpec::Albers { preset }));
    let mut worst: f64 = 0.0;
    let mut samples = 0;
    for spec in &specs {
        for lat in (-80..=80).step_by(10) {
            for lon in (-180..180).step_by(10) {
                let (lon, lat) = (lon as f64, lat as f64);
                let (x, y) = spec.forward(lon, lat).unwrap();
                let (lon2, lat2) = spec.inverse(x, y).unwrap();
                worst = worst
                    .max(angle_gap(lon.to_radians(), lon2.to_radians()))
                    .max((lat.to_radians() - lat2.to_radians()).abs());
                samples += 1;
            }
        }
    }
    gate.check(
        "projection inverse recovers coordinates",
        worst < ROUND_TRIP_TOL,
        format!("Mercator and {} Albers presets, {samples} grid points, max error {worst:e} rad", specs.len() - 1),
    );

    let h: f64 = 1e-4;
    let hr = h.to_radians();
    let mut worst: f64 = 0.0;
    for preset in AlbersPreset::all() {
        let spec = ProjectionSpec::Albers { preset };
        let lon0 = preset.params().lon0;
        for lat in (-80..=80).step_by(10) {
            for k in -17..=17 {
                let (lon, lat) = (lon0 + 10.0 * k as f64, lat as f64);
                let f = |dl: f64, dp: f64| spec.forward(lon + dl, lat + dp).unwrap();
                let (xe, ye) = f(h, 0.0);
                let (xw, yw) = f(-h, 0.0);
                let (xn, yn) = f(0.0, h);
                let (xs, ys) = f(0.0, -h);
                let det = ((xe - xw) * (yn - ys) - (xn - xs) * (ye - yw)) / (4.0 * hr * hr);
                worst = worst.max((det - lat.to_radians().cos()).abs());
            }
        }
    }
    gate.check(
        "Albers presets are equal-area",
        worst < JACOBIAN_TOL,
        format!("max |det J − cos φ| = {worst:e} over a 10° grid per preset"),
    );

    let mut worst: f64 = 0.0;
    let mut lat = -90.0;
    while lat <= 90.0 {
        for lon in [-180.0, -97.5, -12.25, 0.0, 45.0, 133.0, 179.9] {
            let (x, y) = ProjectionSpec::Robinson.forward(lon, lat).unwrap();
            let (ox, oy) = robinson_oracle(lon, lat);
            worst = worst.max((x - ox).abs()).max((y - oy).abs());
        }
        lat += 2.5;
    }
    let (_, y45) = ProjectionSpec::Robinson.forward(0.0, 45.0).unwrap();
    gate.check(
        "Robinson follows the coefficient table",
        worst < ROBINSON_TOL && (y45 - robinson_oracle(0.0, 45.0).1).abs() < ROBINSON_TOL,
        format!("max deviation {worst:e} over 2.5° latitude steps; y(45°) = {y45}"),
    );
}

// ------------------------------------------------------------------ scene

fn count_elements(svg: &str) -> Option<(usize, usize, usize)> {
    let doc = roxmltree::Document::parse(svg).ok()?;
    let class_is = |n: &roxmltree::Node, tag: &str, class: &str| {
        n.tag_name().name() == tag && n.attribute("class").is_some_and(|c| c.split(' ').any(|c| c == class))
    };
    let regions = doc.descendants().filter(|n| class_is(n, "path", "region")).count();
    let nodes = doc.descendants().filter(|n| class_is(n, "circle", "node")).count();
    let flows = doc.descendants().filter(|n| class_is(n, "path", "flow")).count();
    Some((regions, nodes, flows))
}

fn scene_determinism(gate: &mut Gate) {
    let path = fixture("banana/banana.project.json");
    let project = load_project("banana/banana.project.json");
    let first = render_project(&project, None, 3).unwrap();
    let second = render_project(&project, None, 3).unwrap();
    let counts = count_elements(&first);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("banana.svg");
    let status = odflow_bin().arg("render").arg(&path).arg("-o").arg(&out).status().unwrap();
    let cli = std::fs::read_to_string(&out).unwrap_or_default();

    let config = ServiceConfig::new(dir.path().join("store"));
    let project_json: serde_json::Value = serde_json::from_str(&read_fixture("banana/banana.project.json")).unwrap();
    let body = serde_json::json!({ "project": project_json }).to_string();
    let runtime = tokio::runtime::Runtime::new().unwrap();
    let reply = runtime.block_on(call(&config, "POST", "/render", body));

    gate.check(
        "banana scene is deterministic with expected element counts",
        first == second && counts == Some((9, 9, 11)),
        format!("two renders identical: {}, (regions, nodes, flows) = {counts:?}", first == second),
    );
    gate.check(
        "CLI and service produce identical SVG",
        status.success() && reply.status.is_success() && cli == first && reply.body == first.as_bytes(),
        format!(
            "CLI exit {:?}, service {}, {} bytes, CLI==library {}, service==library {}",
            status.code(),
            reply.status,
            first.len(),
            cli == first,
            reply.body == first.as_bytes()
        ),
    );
}

fn project_round_trip(gate: &mut Gate) {
    let dir = tempfile::tempdir().unwrap();
    let mut same = 0;
    for rel in PROJECT_FIXTURES {
        let original = load_project(rel);
        let saved = dir.path().join(rel.replace('/', "_"));
        original.save(&saved).unwrap();
        let reloaded = ProjectFile::load(&saved).unwrap();
        if reloaded == original && render_project(&reloaded, None, 3).unwrap() == render_project(&original, None, 3).unwrap() {
            same += 1;
        }
    }
    gate.check(
        "project files survive save and load",
        same == PROJECT_FIXTURES.len(),
        format!("{same}/{} fixtures render byte-identically after a round trip", PROJECT_FIXTURES.len()),
    );
}

// -------------------------------------------------------------- centroids

/// Centroid as the area-weighted mean of rectangle centroids.
fn rectangles_centroid(rects: &[([f64; 2], [f64; 2])]) -> [f64; 2] {
    let mut acc = [0.0; 3];
    for (lo, hi) in rects {
        let area = (hi[0] - lo[0]) * (hi[1] - lo[1]);
        acc[0] += area * (lo[0] + hi[0]) / 2.0;
        acc[1] += area * (lo[1] + hi[1]) / 2.0;
        acc[2] += area;
    }
    [acc[0] / acc[2], acc[1] / acc[2]]
}

fn centroids(gate: &mut Gate) {
    let square = Polygon::new(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
    let c = polygon_centroid(&square).unwrap();
    gate.check("unit square centroid", c == [0.5, 0.5], format!("{c:?}"));

    let l = Polygon::new(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]]);
    let c = polygon_centroid(&l).unwrap();
    let stated = 7.0 / 9.0;
    gate.check(
        "L-shape centroid at the stated (7/9, 7/9)",
        (c[0] - stated).abs() < CENTROID_TOL && (c[1] - stated).abs() < CENTROID_TOL,
        format!("computed {c:?}; 7/9 = {stated}"),
    );
    let oracle = rectangles_centroid(&[([0.0, 0.0], [2.0, 1.0]), ([0.0, 1.0], [1.0, 2.0])]);
    gate.check(
        "L-shape centroid against rectangle decomposition",
        (c[0] - oracle[0]).abs() < CENTROID_TOL && (c[1] - oracle[1]).abs() < CENTROID_TOL,
        format!("computed {c:?}, decomposition {oracle:?}"),
    );

    let mut rng = StdRng::seed_from_u64(0xCE);
    let mut inside = 0;
    for _ in 0..100 {
        let n = rng.gen_range(3..12);
        let (cx, cy) = (rng.gen_range(-100.0..100.0), rng.gen_range(-50.0..50.0));
        let (rx, ry) = (rng.gen_range(0.1..30.0), rng.gen_range(0.1..30.0));
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let ring: Vec<[f64; 2]> = angles.iter().map(|t| [cx + rx * t.cos(), cy + ry * t.sin()]).collect();
        let Some(c) = polygon_centroid(&Polygon::new(ring.clone())) else { continue };
        let strictly_left = (0..n).all(|i| {
            let (a, b) = (ring[i], ring[(i + 1) % n]);
            (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0.0
        });
        if strictly_left {
            inside += 1;
        }
    }
    gate.check("centroids of convex polygons lie inside", inside == 100, format!("{inside}/100 random convex polygons"));
}

#[test]
fn acceptance() {
    let mut gate = Gate { lines: Vec::new() };
    banana_statistics(&mut gate);
    table_fidelity(&mut gate);
    arrow_bands(&mut gate);
    gravity_model(&mut gate);
    adjusted_model(&mut gate);
    jenks_optimality(&mut gate);
    projections(&mut gate);
    scene_determinism(&mut gate);
    project_round_trip(&mut gate);
    centroids(&mut gate);

    let failed: Vec<&String> = gate.lines.iter().filter(|(ok, _)| !ok).map(|(_, l)| l).collect();
    println!("{} criteria checked, {} failed", gate.lines.len(), failed.len());
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.iter().map(|l| l.as_str()).collect::<Vec<_>>().join("\n"));
}
