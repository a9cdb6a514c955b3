//! The two data tools, shared by the CLI and the service.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::analytics::{expected_flows, modularity_csv, modularity_transform, DistanceMatrix, GravityOptions, NullModel};
use crate::error::{Error, Result};
use crate::ingest::{parse_flows_csv, parse_nodes_csv, parse_regions, points_to_csv, polygons_to_points, AttributeTable};
use crate::ingest::{FlowFields, NodeFields};
use crate::model::{parse_real, FlowNetwork, NodeRecord};

/// Region GeoJSON to a node CSV (`id,X,Y` plus properties) at area-weighted
/// centroids.
pub fn poly2points(geojson: &[u8], id_property: Option<&str>) -> Result<String> {
    let regions = parse_regions(geojson, id_property)?;
    Ok(points_to_csv(&polygons_to_points(&regions)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    #[default]
    AdjustedPaper,
    AdjustedConserving,
    Gravity,
}

impl std::str::FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "adjusted-paper" => Ok(ModelKind::AdjustedPaper),
            "adjusted-conserving" => Ok(ModelKind::AdjustedConserving),
            "gravity" => Ok(ModelKind::Gravity),
            other => Err(format!("unknown model {other:?}; expected adjusted-paper, adjusted-conserving or gravity")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct NormalizeOptions {
    pub model: ModelKind,
    pub beta: f64,
    pub flow_fields: FlowFields,
    pub node_fields: NodeFields,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            model: ModelKind::default(),
            beta: GravityOptions::default().beta,
            flow_fields: FlowFields::default(),
            node_fields: NodeFields::default(),
        }
    }
}

/// Flow CSV to modularity CSV (`origin_id,dest_id,observed,expected,
/// modularity`). Without a node table the nodes are the flow endpoints;
/// the gravity model then needs a distance table
/// (`origin_id,dest_id,distance`).
pub fn normalize(
    flows_csv: &[u8],
    nodes_csv: Option<&[u8]>,
    distances_csv: Option<&[u8]>,
    opts: &NormalizeOptions,
) -> Result<String> {
    let flows = parse_flows_csv(flows_csv, &opts.flow_fields)?;
    let nodes = match nodes_csv {
        Some(text) => parse_nodes_csv(text, &opts.node_fields)?,
        None => {
            let mut seen = HashSet::new();
            flows
                .iter()
                .flat_map(|f| [&f.origin, &f.dest])
                .filter(|id| seen.insert(id.as_str()))
                .map(|id| NodeRecord::new(id.clone(), 0.0, 0.0))
                .collect()
        }
    };
    let network = FlowNetwork::build(nodes, flows)?;
    let model = match opts.model {
        ModelKind::AdjustedPaper => NullModel::AdjustedPaper,
        ModelKind::AdjustedConserving => NullModel::AdjustedConserving,
        ModelKind::Gravity => {
            if !(opts.beta.is_finite() && opts.beta >= 0.0) {
                return Err(Error::InvalidStyle(format!("beta must be a nonnegative number, got {}", opts.beta)));
            }
            NullModel::Gravity(GravityOptions { beta: opts.beta, ..GravityOptions::default() })
        }
    };
    let distances = match distances_csv {
        Some(text) => Some(parse_distances(text, &network)?),
        None if opts.model == ModelKind::Gravity && nodes_csv.is_none() => {
            return Err(Error::MissingDistance(
                "the gravity model needs node coordinates or a distance table".into(),
            ))
        }
        None => None,
    };
    let expected = expected_flows(&network, &model, distances.as_ref())?;
    Ok(modularity_csv(&modularity_transform(&network, &expected)?))
}

fn parse_distances(text: &[u8], network: &FlowNetwork) -> Result<DistanceMatrix> {
    let table = AttributeTable::from_csv(text)?;
    let (o, d, v) = (table.column("origin_id")?, table.column("dest_id")?, table.column("distance")?);
    let mut triples = Vec::with_capacity(table.rows.len());
    for (i, row) in table.rows.iter().enumerate() {
        let dist = parse_real(&row[v]).ok_or_else(|| Error::NonNumericValue {
            record: i as u64 + 1,
            column: "distance".into(),
            value: row[v].clone(),
        })?;
        triples.push((row[o].as_str(), row[d].as_str(), dist));
    }
    DistanceMatrix::from_pairs(network, triples)
}
