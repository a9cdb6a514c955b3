use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{parse_real, AttrValue, Attributes, FlowRecord, NodeRecord};

/// Column names that identify node ids and coordinates in a node table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeFields {
    pub id: String,
    pub x: String,
    pub y: String,
}

impl Default for NodeFields {
    fn default() -> Self {
        NodeFields { id: "id".into(), x: "X".into(), y: "Y".into() }
    }
}

/// Column names for flow origin, destination and volume.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowFields {
    pub origin: String,
    pub dest: String,
    pub value: String,
}

impl Default for FlowFields {
    fn default() -> Self {
        FlowFields { origin: "origin".into(), dest: "dest".into(), value: "value".into() }
    }
}

/// A header plus string rows of equal arity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AttributeTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl AttributeTable {
    pub fn from_csv(text: &[u8]) -> Result<Self> {
        let text = text.strip_prefix(b"\xEF\xBB\xBF").unwrap_or(text);
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(text);
        let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record?;
            rows.push(record.iter().map(str::to_string).collect());
        }
        Ok(AttributeTable { header, rows })
    }

    pub fn column(&self, name: &str) -> Result<usize> {
        self.header.iter().position(|h| h == name).ok_or_else(|| Error::MissingColumn {
            column: name.to_string(),
            available: self.header.clone(),
        })
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Remaining columns of `row` as typed attributes, skipping `exclude`.
    fn attributes(&self, row: &[String], exclude: &[usize]) -> Attributes {
        self.header
            .iter()
            .zip(row)
            .enumerate()
            .filter(|(i, _)| !exclude.contains(i))
            .map(|(_, (name, cell))| (name.clone(), AttrValue::from_text(cell)))
            .collect()
    }
}

fn number(cell: &str, record: u64, column: &str) -> Result<f64> {
    parse_real(cell).ok_or_else(|| Error::NonNumericValue {
        record,
        column: column.to_string(),
        value: cell.to_string(),
    })
}

fn id_cell(cell: &str, record: u64, column: &str) -> Result<String> {
    if cell.is_empty() {
        return Err(Error::EmptyId { record, column: column.to_string() });
    }
    Ok(cell.to_string())
}

/// One node per data row; columns other than id/x/y become attributes.
pub fn parse_nodes_csv(text: &[u8], fields: &NodeFields) -> Result<Vec<NodeRecord>> {
    let table = AttributeTable::from_csv(text)?;
    let id_col = table.column(&fields.id)?;
    let x_col = table.column(&fields.x)?;
    let y_col = table.column(&fields.y)?;

    let mut seen = std::collections::HashSet::new();
    let mut nodes = Vec::with_capacity(table.rows.len());
    for (i, row) in table.rows.iter().enumerate() {
        let record = i as u64 + 1;
        let id = id_cell(&row[id_col], record, &fields.id)?;
        let lon = number(&row[x_col], record, &fields.x)?;
        let lat = number(&row[y_col], record, &fields.y)?;
        if !(-180.0..=180.0).contains(&lon) || !(-90.0..=90.0).contains(&lat) {
            return Err(Error::CoordinateOutOfRange { record, lon, lat });
        }
        if !seen.insert(id.clone()) {
            return Err(Error::DuplicateNodeId { id, record });
        }
        let attributes = table.attributes(row, &[id_col, x_col, y_col]);
        nodes.push(NodeRecord { id, lon, lat, attributes });
    }
    Ok(nodes)
}

/// One flow per data row; columns other than origin/dest/value become
/// attributes. Self-flows are accepted here.
pub fn parse_flows_csv(text: &[u8], fields: &FlowFields) -> Result<Vec<FlowRecord>> {
    let table = AttributeTable::from_csv(text)?;
    let o_col = table.column(&fields.origin)?;
    let d_col = table.column(&fields.dest)?;
    let v_col = table.column(&fields.value)?;

    let mut flows = Vec::with_capacity(table.rows.len());
    for (i, row) in table.rows.iter().enumerate() {
        let record = i as u64 + 1;
        let origin = id_cell(&row[o_col], record, &fields.origin)?;
        let dest = id_cell(&row[d_col], record, &fields.dest)?;
        let value = number(&row[v_col], record, &fields.value)?;
        if value < 0.0 {
            return Err(Error::NonNegativeViolation { record, column: fields.value.clone(), value });
        }
        let attributes = table.attributes(row, &[o_col, d_col, v_col]);
        flows.push(FlowRecord { origin, dest, value, attributes });
    }
    Ok(flows)
}

fn attribute_columns<'a>(attrs: impl Iterator<Item = &'a Attributes>, reserved: &[&str]) -> Vec<String> {
    let mut columns: Vec<String> = Vec::new();
    for a in attrs {
        for key in a.keys() {
            if !reserved.contains(&key) && !columns.iter().any(|c| c == key) {
                columns.push(key.to_string());
            }
        }
    }
    columns
}

fn cell(attrs: &Attributes, column: &str) -> String {
    attrs.get(column).map(|v| v.to_string()).unwrap_or_default()
}

fn finish(writer: csv::Writer<Vec<u8>>) -> String {
    // Writing into a Vec cannot fail and csv emits valid UTF-8 for &str input.
    let bytes = writer.into_inner().unwrap_or_default();
    String::from_utf8(bytes).unwrap_or_default()
}

/// Serializes nodes with `fields` as the id/x/y headers, followed by the
/// union of attribute columns in first-seen order.
pub fn write_nodes_csv(nodes: &[NodeRecord], fields: &NodeFields) -> String {
    let reserved = [fields.id.as_str(), fields.x.as_str(), fields.y.as_str()];
    let columns = attribute_columns(nodes.iter().map(|n| &n.attributes), &reserved);
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let mut header: Vec<&str> = reserved.to_vec();
    header.extend(columns.iter().map(String::as_str));
    let _ = w.write_record(&header);
    for n in nodes {
        let mut row = vec![n.id.clone(), format!("{}", n.lon), format!("{}", n.lat)];
        row.extend(columns.iter().map(|c| cell(&n.attributes, c)));
        let _ = w.write_record(&row);
    }
    finish(w)
}

pub fn write_flows_csv(flows: &[FlowRecord], fields: &FlowFields) -> String {
    let reserved = [fields.origin.as_str(), fields.dest.as_str(), fields.value.as_str()];
    let columns = attribute_columns(flows.iter().map(|f| &f.attributes), &reserved);
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let mut header: Vec<&str> = reserved.to_vec();
    header.extend(columns.iter().map(String::as_str));
    let _ = w.write_record(&header);
    for f in flows {
        let mut row = vec![f.origin.clone(), f.dest.clone(), format!("{}", f.value)];
        row.extend(columns.iter().map(|c| cell(&f.attributes, c)));
        let _ = w.write_record(&row);
    }
    finish(w)
}

/// The polygons-to-points output table: `id,X,Y` plus copied attributes.
pub fn points_to_csv(nodes: &[NodeRecord]) -> String {
    write_nodes_csv(nodes, &NodeFields::default())
}
