//! Node statistics, flow filtering and flow normalization.
//!
//! Normalization compares each observed flow with a null-model expectation
//! and keeps the difference ("modularity"): positive values mark pairs that
//! exchange more than the model predicts. Three models are available:
//!
//! * [`NullModel::AdjustedPaper`]: `E(O,D) = F_O·F_D·f(O,D) / (F_S² − Σ F_out·F_in)`,
//!   the adjusted-volume formula with the observed flow in the numerator.
//!   It does not conserve the total.
//! * [`NullModel::AdjustedConserving`]: the same with `F_S` in place of
//!   `f(O,D)`, so expectations over all ordered pairs sum to `F_S`.
//! * [`NullModel::Gravity`]: a doubly-constrained gravity model
//!   `E_ij = A_i·O_i·B_j·D_j·d_ij^−β`, balanced by alternating updates until
//!   row and column sums reproduce the observed marginals.
//!
//! `F_O` is the out-strength of the origin and `F_D` the in-strength of the
//! destination. All models ignore self-flows.

use std::num::NonZeroUsize;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{AttrValue, FlowNetwork, FlowRecord, NodeRecord};
use crate::numeric::exact_sum;

/// Mean Earth radius in kilometres (IUGG).
pub const EARTH_RADIUS_KM: f64 = 6371.0088;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeStats {
    pub id: String,
    pub inflow: f64,
    pub outflow: f64,
    pub gross: f64,
    /// Inflow minus outflow.
    pub net: f64,
    /// `net / gross`, zero for isolated nodes. Equals migration efficiency
    /// for migration data.
    pub net_ratio: f64,
    /// `100000 · gross / population`, when a population was supplied.
    pub per_capita_gross: Option<f64>,
}

impl NodeStats {
    pub fn from_totals(id: impl Into<String>, inflow: f64, outflow: f64) -> Self {
        let gross = inflow + outflow;
        let net = inflow - outflow;
        let net_ratio = if gross > 0.0 { net / gross } else { 0.0 };
        NodeStats { id: id.into(), inflow, outflow, gross, net, net_ratio, per_capita_gross: None }
    }

    pub fn with_population(mut self, population: f64) -> Self {
        self.per_capita_gross = Some(100_000.0 * self.gross / population);
        self
    }
}

/// Gross and net flow per node, in node order.
///
/// With `population_attr`, every node must carry a positive number in that
/// attribute.
pub fn node_stats(network: &FlowNetwork, population_attr: Option<&str>) -> Result<Vec<NodeStats>> {
    let ins = network.in_strengths();
    let outs = network.out_strengths();
    network
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, node)| {
            let stats = NodeStats::from_totals(node.id.clone(), ins[i], outs[i]);
            match population_attr {
                None => Ok(stats),
                Some(attr) => match node.attributes.get_f64(attr) {
                    Some(p) if p > 0.0 => Ok(stats.with_population(p)),
                    _ => Err(Error::NonPositivePopulation { node: node.id.clone(), attr: attr.to_string() }),
                },
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GravityOptions {
    /// Distance-decay exponent.
    pub beta: f64,
    /// Stop once the largest relative marginal error falls below this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for GravityOptions {
    fn default() -> Self {
        GravityOptions { beta: 2.0, tolerance: 1e-10, max_iterations: 500 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum NullModel {
    AdjustedPaper,
    AdjustedConserving,
    Gravity(GravityOptions),
}

impl NullModel {
    pub fn name(&self) -> &'static str {
        match self {
            NullModel::AdjustedPaper => "adjusted-paper",
            NullModel::AdjustedConserving => "adjusted-conserving",
            NullModel::Gravity(_) => "gravity",
        }
    }
}

/// Pairwise separation between nodes, row-major, indexed like the network's
/// node list.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl DistanceMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut values = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                values.push(if i == j { 0.0 } else { f(i, j) });
            }
        }
        DistanceMatrix { n, values }
    }

    /// Great-circle kilometres between node coordinates.
    pub fn great_circle(nodes: &[NodeRecord]) -> Self {
        Self::from_fn(nodes.len(), |i, j| haversine_km(nodes[i].lon, nodes[i].lat, nodes[j].lon, nodes[j].lat))
    }

    /// Builds a matrix from `(origin, dest, distance)` triples. Every ordered
    /// pair of distinct nodes must be listed, either direction: a missing
    /// `(a, b)` falls back to `(b, a)`.
    pub fn from_pairs<'a>(
        network: &FlowNetwork,
        pairs: impl IntoIterator<Item = (&'a str, &'a str, f64)>,
    ) -> Result<Self> {
        let n = network.nodes().len();
        let mut values = vec![f64::NAN; n * n];
        for (o, d, dist) in pairs {
            let (Some(i), Some(j)) = (network.node_index(o), network.node_index(d)) else {
                return Err(Error::MissingDistance(format!("unknown node in pair {o} -> {d}")));
            };
            values[i * n + j] = dist;
        }
        for i in 0..n {
            values[i * n + i] = 0.0;
            for j in 0..n {
                if values[i * n + j].is_nan() {
                    values[i * n + j] = values[j * n + i];
                }
            }
        }
        if let Some(k) = values.iter().position(|v| v.is_nan()) {
            let ids = network.nodes();
            return Err(Error::MissingDistance(format!("{} -> {}", ids[k / n].id, ids[k % n].id)));
        }
        Ok(DistanceMatrix { n, values })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }
}

pub fn haversine_km(lon1: f64, lat1: f64, lon2: f64, lat2: f64) -> f64 {
    let (p1, p2) = (lat1.to_radians(), lat2.to_radians());
    let dp = p2 - p1;
    let dl = (lon2 - lon1).to_radians();
    let h = (dp / 2.0).sin().powi(2) + p1.cos() * p2.cos() * (dl / 2.0).sin().powi(2);
    2.0 * EARTH_RADIUS_KM * h.sqrt().min(1.0).asin()
}

/// Balance factors and diagnostics of a gravity fit. `A`/`B` are only
/// determined up to a reciprocal scale; compare expectations, not factors.
#[derive(Debug, Clone, PartialEq)]
pub struct GravityFit {
    pub beta: f64,
    pub origin_balance: Vec<f64>,
    pub dest_balance: Vec<f64>,
}

/// Expected flow for every ordered pair of distinct nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedFlowMatrix {
    pub model: NullModel,
    pub node_ids: Vec<String>,
    values: Vec<f64>,
    pub gravity: Option<GravityFit>,
    /// Balancing iterations run (zero for the adjusted models).
    pub iterations: usize,
    /// Largest relative marginal error at the last iterate (zero for the
    /// adjusted models).
    pub residual: f64,
}

impl ExpectedFlowMatrix {
    pub fn len(&self) -> usize {
        self.node_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node_ids.is_empty()
    }

    /// Expectation for node indices `(i, j)`; zero on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.node_ids.len() + j]
    }

    pub fn total(&self) -> f64 {
        exact_sum(self.values.iter().copied())
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        let n = self.len();
        exact_sum(self.values[i * n..(i + 1) * n].iter().copied())
    }

    pub fn col_sum(&self, j: usize) -> f64 {
        let n = self.len();
        exact_sum((0..n).map(|i| self.values[i * n + j]))
    }
}

/// Out- and in-strength over non-self flows, and the observed pair matrix.
fn marginals(network: &FlowNetwork) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let n = network.nodes().len();
    let mut observed = vec![0.0; n * n];
    let mut outs: Vec<Vec<f64>> = vec![Vec::new(); n];
    let mut ins: Vec<Vec<f64>> = vec![Vec::new(); n];
    for ((o, d), v) in network.observed_pairs() {
        observed[o * n + d] = v;
        outs[o].push(v);
        ins[d].push(v);
    }
    let outs = outs.into_iter().map(exact_sum).collect();
    let ins = ins.into_iter().map(exact_sum).collect();
    (outs, ins, observed)
}

pub fn expected_flows(
    network: &FlowNetwork,
    model: &NullModel,
    distances: Option<&DistanceMatrix>,
) -> Result<ExpectedFlowMatrix> {
    if !(network.total() > 0.0) {
        return Err(Error::EmptyNetwork);
    }
    let node_ids: Vec<String> = network.nodes().iter().map(|n| n.id.clone()).collect();
    let (outs, ins, observed) = marginals(network);

    match model {
        NullModel::AdjustedPaper | NullModel::AdjustedConserving => {
            let values = adjusted(&outs, &ins, &observed, matches!(model, NullModel::AdjustedConserving))?;
            Ok(ExpectedFlowMatrix { model: *model, node_ids, values, gravity: None, iterations: 0, residual: 0.0 })
        }
        NullModel::Gravity(opts) => {
            let owned;
            let distances = match distances {
                Some(d) => d,
                None => {
                    owned = DistanceMatrix::great_circle(network.nodes());
                    &owned
                }
            };
            gravity(node_ids, &outs, &ins, distances, *opts)
        }
    }
}

fn adjusted(outs: &[f64], ins: &[f64], observed: &[f64], conserving: bool) -> Result<Vec<f64>> {
    let n = outs.len();
    let total = exact_sum(outs.iter().copied());
    let within = exact_sum(outs.iter().zip(ins).map(|(o, i)| o * i));
    let denominator = total * total - within;
    if !(denominator > 0.0) {
        return Err(Error::ZeroDenominator);
    }
    let mut values = vec![0.0; n * n];
    for o in 0..n {
        for d in 0..n {
            if o == d {
                continue;
            }
            let scale = if conserving { total } else { observed[o * n + d] };
            values[o * n + d] = outs[o] * ins[d] * scale / denominator;
        }
    }
    Ok(values)
}

fn gravity(
    node_ids: Vec<String>,
    outs: &[f64],
    ins: &[f64],
    distances: &DistanceMatrix,
    opts: GravityOptions,
) -> Result<ExpectedFlowMatrix> {
    let n = outs.len();
    if distances.len() != n {
        return Err(Error::MissingDistance(format!("matrix covers {} nodes, network has {n}", distances.len())));
    }
    let mut decay = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let d = distances.get(i, j);
            if !(d > 0.0) || !d.is_finite() {
                return Err(Error::ZeroDistance { origin: node_ids[i].clone(), dest: node_ids[j].clone() });
            }
            decay[i * n + j] = d.powf(-opts.beta);
        }
    }

    let mut a = vec![0.0; n];
    let mut b: Vec<f64> = ins.iter().map(|&d| if d > 0.0 { 1.0 } else { 0.0 }).collect();
    let mut values = vec![0.0; n * n];
    let mut residual = f64::INFINITY;
    let mut iterations = 0;

    while iterations < opts.max_iterations {
        iterations += 1;
        for i in 0..n {
            a[i] = if outs[i] > 0.0 {
                let s: f64 = (0..n).map(|j| b[j] * ins[j] * decay[i * n + j]).sum();
                if s > 0.0 { 1.0 / s } else { 0.0 }
            } else {
                0.0
            };
        }
        // Column balancing in ratio form, so a column with a single
        // contributor receives its in-strength exactly.
        for j in 0..n {
            let s: f64 = (0..n).map(|i| a[i] * outs[i] * decay[i * n + j]).sum();
            let live = ins[j] > 0.0 && s > 0.0;
            b[j] = if live { 1.0 / s } else { 0.0 };
            for i in 0..n {
                values[i * n + j] = if live { ins[j] * (a[i] * outs[i] * decay[i * n + j] / s) } else { 0.0 };
            }
        }
        residual = marginal_error(&values, outs, ins);
        if residual < opts.tolerance {
            break;
        }
    }

    let matrix = ExpectedFlowMatrix {
        model: NullModel::Gravity(opts),
        node_ids,
        values,
        gravity: Some(GravityFit { beta: opts.beta, origin_balance: a, dest_balance: b }),
        iterations,
        residual,
    };
    if residual < opts.tolerance {
        Ok(matrix)
    } else {
        Err(Error::NoConvergence(Box::new(matrix)))
    }
}

/// Largest relative deviation of row sums from `outs` and column sums from
/// `ins`, over nodes with positive marginals.
fn marginal_error(values: &[f64], outs: &[f64], ins: &[f64]) -> f64 {
    let n = outs.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        if outs[i] > 0.0 {
            let row = exact_sum(values[i * n..(i + 1) * n].iter().copied());
            worst = worst.max((row - outs[i]).abs() / outs[i]);
        }
        if ins[i] > 0.0 {
            let col = exact_sum((0..n).map(|k| values[k * n + i]));
            worst = worst.max((col - ins[i]).abs() / ins[i]);
        }
    }
    worst
}

/// Observed minus expected for every ordered pair of distinct nodes, in node
/// order. Pairs with zero observed and zero expected volume are omitted.
///
/// Each record's `value` is the modularity; the `observed` and `expected`
/// attributes carry the two inputs.
pub fn modularity_transform(network: &FlowNetwork, expected: &ExpectedFlowMatrix) -> Result<Vec<FlowRecord>> {
    let nodes = network.nodes();
    if expected.len() != nodes.len() || nodes.iter().zip(&expected.node_ids).any(|(n, id)| n.id != *id) {
        return Err(Error::MismatchedExpectation);
    }
    let n = nodes.len();
    let (_, _, observed) = marginals(network);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let obs = observed[i * n + j];
            let exp = expected.get(i, j);
            if obs == 0.0 && exp == 0.0 {
                continue;
            }
            let mut record = FlowRecord::new(nodes[i].id.clone(), nodes[j].id.clone(), obs - exp);
            record.attributes.insert("observed", AttrValue::Number(obs));
            record.attributes.insert("expected", AttrValue::Number(exp));
            out.push(record);
        }
    }
    Ok(out)
}

/// CSV table `origin_id,dest_id,observed,expected,modularity` for the output
/// of [`modularity_transform`].
pub fn modularity_csv(records: &[FlowRecord]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let _ = w.write_record(["origin_id", "dest_id", "observed", "expected", "modularity"]);
    for r in records {
        let observed = r.attributes.get_f64("observed").unwrap_or(0.0);
        let expected = r.attributes.get_f64("expected").unwrap_or(0.0);
        let _ = w.write_record([
            r.origin.clone(),
            r.dest.clone(),
            format!("{observed}"),
            format!("{expected}"),
            format!("{}", r.value),
        ]);
    }
    String::from_utf8(w.into_inner().unwrap_or_default()).unwrap_or_default()
}

/// The `n` largest flows, largest first. Equal values are ordered by
/// `(origin, dest)` so the cut is deterministic.
pub fn filter_top_n(flows: &[FlowRecord], n: NonZeroUsize) -> Vec<FlowRecord> {
    let mut ranked: Vec<&FlowRecord> = flows.iter().collect();
    ranked.sort_by(|a, b| b.value.total_cmp(&a.value).then_with(|| a.tie_key().cmp(&b.tie_key())));
    ranked.into_iter().take(n.get()).cloned().collect()
}

/// Splits flows into those touching `node_id` and the rest, keeping order.
pub fn incident_flows<'a>(flows: &'a [FlowRecord], node_id: &str) -> (Vec<&'a FlowRecord>, Vec<&'a FlowRecord>) {
    flows.iter().partition(|f| f.origin == node_id || f.dest == node_id)
}
