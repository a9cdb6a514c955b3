//! Domain types shared by the whole crate, plus network assembly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, UnknownReference};
use crate::numeric::exact_sum;

/// A single attribute cell: numeric when the source text parses as a finite
/// real, text otherwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AttrValue {
    Number(f64),
    Text(String),
}

impl AttrValue {
    /// Classifies raw CSV text. Empty and non-numeric cells stay text.
    pub fn from_text(raw: &str) -> Self {
        let trimmed = raw.trim();
        match parse_real(trimmed) {
            Some(v) => AttrValue::Number(v),
            None => AttrValue::Text(trimmed.to_string()),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            AttrValue::Number(v) => Some(*v),
            AttrValue::Text(s) => parse_real(s.trim()),
        }
    }

    /// String form used for joins: exact trimmed text, numbers in shortest
    /// round-trip form (`234.0` and `234` both give `"234"`).
    pub fn as_key(&self) -> String {
        match self {
            AttrValue::Number(v) => format!("{v}"),
            AttrValue::Text(s) => s.trim().to_string(),
        }
    }
}

impl fmt::Display for AttrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttrValue::Number(v) => write!(f, "{v}"),
            AttrValue::Text(s) => f.write_str(s),
        }
    }
}

/// Parses a plain decimal real. Rejects thousands separators, `inf`, `NaN`
/// and empty strings.
pub fn parse_real(s: &str) -> Option<f64> {
    if s.is_empty() || s.contains(',') {
        return None;
    }
    if !s.bytes().all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'-' | b'+' | b'e' | b'E')) {
        return None;
    }
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Insertion-ordered attribute map. Column order is kept so tables written
/// back out match the source layout.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Attributes(Vec<(String, AttrValue)>);

impl Attributes {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&AttrValue> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn get_f64(&self, name: &str) -> Option<f64> {
        self.get(name).and_then(AttrValue::as_f64)
    }

    /// Inserts or replaces, keeping the original position on replace.
    pub fn insert(&mut self, name: impl Into<String>, value: AttrValue) {
        let name = name.into();
        match self.0.iter_mut().find(|(k, _)| *k == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name, value)),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &AttrValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(k, _)| k.as_str())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(String, AttrValue)> for Attributes {
    fn from_iter<T: IntoIterator<Item = (String, AttrValue)>>(iter: T) -> Self {
        let mut attrs = Attributes::new();
        for (k, v) in iter {
            attrs.insert(k, v);
        }
        attrs
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeRecord {
    pub id: String,
    /// Degrees east, WGS84.
    pub lon: f64,
    /// Degrees north, WGS84.
    pub lat: f64,
    pub attributes: Attributes,
}

impl NodeRecord {
    pub fn new(id: impl Into<String>, lon: f64, lat: f64) -> Self {
        NodeRecord { id: id.into(), lon, lat, attributes: Attributes::new() }
    }

    pub fn with_attr(mut self, name: &str, value: AttrValue) -> Self {
        self.attributes.insert(name, value);
        self
    }

    pub fn has_valid_coordinates(&self) -> bool {
        self.lon.is_finite()
            && self.lat.is_finite()
            && (-180.0..=180.0).contains(&self.lon)
            && (-90.0..=90.0).contains(&self.lat)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowRecord {
    pub origin: String,
    pub dest: String,
    /// Flow magnitude, finite and nonnegative for observed data. Modularity
    /// flows reuse this type and may be negative.
    pub value: f64,
    pub attributes: Attributes,
}

impl FlowRecord {
    pub fn new(origin: impl Into<String>, dest: impl Into<String>, value: f64) -> Self {
        FlowRecord { origin: origin.into(), dest: dest.into(), value, attributes: Attributes::new() }
    }

    pub fn is_self_flow(&self) -> bool {
        self.origin == self.dest
    }

    pub(crate) fn tie_key(&self) -> (&str, &str) {
        (&self.origin, &self.dest)
    }
}

/// One polygon: an exterior ring plus holes, vertices as `[lon, lat]`
/// without the closing repeat.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    pub exterior: Vec<[f64; 2]>,
    pub holes: Vec<Vec<[f64; 2]>>,
}

impl Polygon {
    pub fn new(exterior: Vec<[f64; 2]>) -> Self {
        Polygon { exterior, holes: Vec::new() }
    }

    pub fn rings(&self) -> impl Iterator<Item = &[[f64; 2]]> {
        std::iter::once(self.exterior.as_slice()).chain(self.holes.iter().map(Vec::as_slice))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionFeature {
    pub id: String,
    pub polygons: Vec<Polygon>,
    pub attributes: Attributes,
}

/// Nodes and directed flows joined into a graph with cached strengths.
///
/// Self-flows are kept and counted in the strengths and total; rendering and
/// the expected-flow models skip them.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    nodes: Vec<NodeRecord>,
    flows: Vec<FlowRecord>,
    index: HashMap<String, usize>,
    endpoints: Vec<(usize, usize)>,
    out_strength: Vec<f64>,
    in_strength: Vec<f64>,
    total: f64,
}

impl FlowNetwork {
    /// Joins flows to nodes by exact id. Every flow must resolve; all
    /// offending rows are reported together.
    pub fn build(nodes: Vec<NodeRecord>, flows: Vec<FlowRecord>) -> Result<Self> {
        let mut index = HashMap::with_capacity(nodes.len());
        for (i, node) in nodes.iter().enumerate() {
            if node.id.is_empty() {
                return Err(Error::EmptyId { record: i as u64 + 1, column: "id".into() });
            }
            if !node.has_valid_coordinates() {
                return Err(Error::CoordinateOutOfRange { record: i as u64 + 1, lon: node.lon, lat: node.lat });
            }
            if index.insert(node.id.clone(), i).is_some() {
                return Err(Error::DuplicateNodeId { id: node.id.clone(), record: i as u64 + 1 });
            }
        }

        let mut endpoints = Vec::with_capacity(flows.len());
        let mut unknown = Vec::new();
        for (row, flow) in flows.iter().enumerate() {
            if !flow.value.is_finite() || flow.value < 0.0 {
                return Err(Error::NonNegativeViolation {
                    record: row as u64 + 1,
                    column: "value".into(),
                    value: flow.value,
                });
            }
            match (index.get(&flow.origin), index.get(&flow.dest)) {
                (Some(&o), Some(&d)) => endpoints.push((o, d)),
                (o, d) => {
                    let mut missing = Vec::new();
                    if o.is_none() {
                        missing.push(flow.origin.clone());
                    }
                    if d.is_none() {
                        missing.push(flow.dest.clone());
                    }
                    unknown.push(UnknownReference {
                        row,
                        origin: flow.origin.clone(),
                        dest: flow.dest.clone(),
                        missing,
                    });
                }
            }
        }
        if !unknown.is_empty() {
            return Err(Error::UnknownNodeReference(unknown));
        }

        let mut outgoing: Vec<Vec<f64>> = vec![Vec::new(); nodes.len()];
        let mut incoming: Vec<Vec<f64>> = vec![Vec::new(); nodes.len()];
        for (flow, &(o, d)) in flows.iter().zip(&endpoints) {
            outgoing[o].push(flow.value);
            incoming[d].push(flow.value);
        }
        let out_strength: Vec<f64> = outgoing.into_iter().map(exact_sum).collect();
        let in_strength: Vec<f64> = incoming.into_iter().map(exact_sum).collect();
        let total = exact_sum(flows.iter().map(|f| f.value));

        Ok(FlowNetwork { nodes, flows, index, endpoints, out_strength, in_strength, total })
    }

    pub fn nodes(&self) -> &[NodeRecord] {
        &self.nodes
    }

    pub fn flows(&self) -> &[FlowRecord] {
        &self.flows
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn node(&self, id: &str) -> Option<&NodeRecord> {
        self.node_index(id).map(|i| &self.nodes[i])
    }

    /// Node indices `(origin, dest)` of flow `i`.
    pub fn endpoints(&self, i: usize) -> (usize, usize) {
        self.endpoints[i]
    }

    pub fn out_strengths(&self) -> &[f64] {
        &self.out_strength
    }

    pub fn in_strengths(&self) -> &[f64] {
        &self.in_strength
    }

    pub fn out_strength(&self, id: &str) -> Option<f64> {
        self.node_index(id).map(|i| self.out_strength[i])
    }

    pub fn in_strength(&self, id: &str) -> Option<f64> {
        self.node_index(id).map(|i| self.in_strength[i])
    }

    /// Total observed volume, self-flows included.
    pub fn total(&self) -> f64 {
        self.total
    }

    /// Observed volume per ordered node pair, duplicate rows summed,
    /// self-flows dropped.
    pub fn observed_pairs(&self) -> BTreeMap<(usize, usize), f64> {
        let mut grouped: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
        for (flow, &(o, d)) in self.flows.iter().zip(&self.endpoints) {
            if o != d {
                grouped.entry((o, d)).or_default().push(flow.value);
            }
        }
        grouped.into_iter().map(|(k, v)| (k, exact_sum(v))).collect()
    }
}
