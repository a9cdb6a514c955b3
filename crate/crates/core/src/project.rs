//! The project document: embedded datasets, joins, per-layer symbology and
//! map settings, serialized as one JSON object with `"version": "1"`.

use std::num::NonZeroUsize;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classify::{scheme_colors, ClassMethod, Rgb, MAX_CLASSES, MIN_CLASSES};
use crate::error::{Error, Result};
use crate::geometry::{FlowStyle, PathMode, ProjectionSpec, TrafficRule};
use crate::ingest::{
    join_attributes, parse_flows_csv, parse_nodes_csv, parse_regions, AttributeTable, FlowFields, JoinReport,
    NodeFields,
};
use crate::model::{FlowNetwork, RegionFeature};

pub const FORMAT_VERSION: &str = "1";

/// Raw dataset text, stored verbatim.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Datasets {
    pub nodes_csv: String,
    pub flows_csv: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regions_geojson: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region_attributes_csv: Option<String>,
}

/// Region feature property matched against an attribute table column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionJoin {
    pub feature_id: String,
    pub table_id: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Joins {
    #[serde(default)]
    pub nodes: NodeFields,
    #[serde(default)]
    pub flows: FlowFields,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regions: Option<RegionJoin>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scaling {
    Proportional,
    Classified {
        method: ClassMethod,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        breaks: Option<Vec<f64>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColorSpec {
    Single { color: Rgb },
    Continuous { from: Rgb, to: Rgb },
    Classified { scheme: String, k: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stroke {
    pub color: Rgb,
    pub width: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LegendSettings {
    #[serde(default = "yes")]
    pub visible: bool,
    #[serde(default)]
    pub title: String,
    #[serde(default)]
    pub decimals: usize,
}

impl Default for LegendSettings {
    fn default() -> Self {
        LegendSettings { visible: true, title: String::new(), decimals: 0 }
    }
}

/// Symbology of one layer. Flow-only fields are ignored elsewhere;
/// `width_range` is the line width for flows and the circle radius for
/// nodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerStyle {
    #[serde(default = "yes")]
    pub visible: bool,
    /// Attribute driving size or color. For nodes, a missing attribute
    /// falls back to the computed statistics `inflow`, `outflow`, `gross`,
    /// `net` and `net_ratio`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default)]
    pub flow_style: FlowStyle,
    #[serde(default)]
    pub traffic_rule: TrafficRule,
    #[serde(default)]
    pub path_mode: PathMode,
    pub scaling: Scaling,
    pub width_range: [f64; 2],
    pub color: ColorSpec,
    pub stroke: Stroke,
    #[serde(default = "one")]
    pub opacity: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_n: Option<NonZeroUsize>,
    #[serde(default)]
    pub legend: LegendSettings,
}

fn yes() -> bool {
    true
}

fn one() -> f64 {
    1.0
}

impl LayerStyle {
    pub fn new(scaling: Scaling, width_range: [f64; 2], color: ColorSpec) -> Self {
        LayerStyle {
            visible: true,
            field: None,
            flow_style: FlowStyle::default(),
            traffic_rule: TrafficRule::default(),
            path_mode: PathMode::default(),
            scaling,
            width_range,
            color,
            stroke: Stroke { color: Rgb(0x33, 0x33, 0x33), width: 0.5 },
            opacity: 1.0,
            top_n: None,
            legend: LegendSettings::default(),
        }
    }

    pub fn validate(&self, layer: &str) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidStyle(format!("{layer} layer: {msg}")));
        let [lo, hi] = self.width_range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return bad(format!("width range [{lo}, {hi}] must satisfy min < max"));
        }
        if lo < 0.0 {
            return bad(format!("width range minimum {lo} is negative"));
        }
        if !(0.0..=1.0).contains(&self.opacity) {
            return bad(format!("opacity {} is outside [0, 1]", self.opacity));
        }
        if !(self.stroke.width.is_finite() && self.stroke.width >= 0.0) {
            return bad(format!("stroke width {} is negative", self.stroke.width));
        }
        if let Scaling::Classified { method, k, breaks } = &self.scaling {
            if !(MIN_CLASSES..=MAX_CLASSES).contains(k) {
                return bad(format!("{k} classes; expected {MIN_CLASSES} to {MAX_CLASSES}"));
            }
            match (method, breaks) {
                (ClassMethod::Manual, None) => return bad("manual classification without breaks".into()),
                (ClassMethod::Manual, Some(b)) => {
                    if b.len() + 1 != *k {
                        return bad(format!("{} manual breaks for {k} classes", b.len()));
                    }
                    if b.windows(2).any(|w| !(w[0] < w[1])) || b.iter().any(|v| !v.is_finite()) {
                        return bad("manual breaks must be strictly increasing".into());
                    }
                }
                _ => {}
            }
        }
        match &self.color {
            ColorSpec::Classified { scheme, k } => {
                scheme_colors(scheme, *k)?;
                if let Scaling::Classified { k: classes, .. } = self.scaling {
                    if classes != *k {
                        return bad(format!("{classes} classes but {k} scheme colors"));
                    }
                }
            }
            ColorSpec::Single { .. } | ColorSpec::Continuous { .. } => {}
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Layers {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regions: Option<LayerStyle>,
    pub nodes: LayerStyle,
    pub flows: LayerStyle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Corner {
    TopLeft,
    #[default]
    TopRight,
    BottomLeft,
    BottomRight,
}

/// Free text placed at a geographic anchor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapLabel {
    pub text: String,
    pub lon: f64,
    pub lat: f64,
    #[serde(default = "label_size")]
    pub size: f64,
}

fn label_size() -> f64 {
    12.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapSettings {
    #[serde(default = "default_width")]
    pub width: u32,
    #[serde(default = "default_height")]
    pub height: u32,
    #[serde(default)]
    pub projection: ProjectionSpec,
    #[serde(default = "white")]
    pub background: Rgb,
    #[serde(default = "one")]
    pub background_opacity: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    #[serde(default)]
    pub north_arrow: bool,
    #[serde(default)]
    pub north_arrow_corner: Corner,
    #[serde(default)]
    pub projection_label: bool,
    #[serde(default)]
    pub labels: Vec<MapLabel>,
    /// Opacity multiplier for flows not incident to the selected node.
    #[serde(default = "dim_factor")]
    pub dim_factor: f64,
    /// Legend block offset from the lower-left corner, in px.
    #[serde(default = "legend_offset")]
    pub legend_offset: [f64; 2],
}

fn default_width() -> u32 {
    960
}

fn default_height() -> u32 {
    600
}

fn white() -> Rgb {
    Rgb(0xFF, 0xFF, 0xFF)
}

fn dim_factor() -> f64 {
    0.15
}

fn legend_offset() -> [f64; 2] {
    [16.0, 16.0]
}

impl Default for MapSettings {
    fn default() -> Self {
        MapSettings {
            width: default_width(),
            height: default_height(),
            projection: ProjectionSpec::default(),
            background: white(),
            background_opacity: 1.0,
            title: None,
            north_arrow: false,
            north_arrow_corner: Corner::default(),
            projection_label: false,
            labels: Vec::new(),
            dim_factor: dim_factor(),
            legend_offset: legend_offset(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectFile {
    pub version: String,
    pub datasets: Datasets,
    #[serde(default)]
    pub joins: Joins,
    pub layers: Layers,
    #[serde(default)]
    pub map: MapSettings,
}

/// Parsed and joined project data, ready for composition.
#[derive(Debug, Clone)]
pub struct ResolvedProject {
    pub network: FlowNetwork,
    pub regions: Vec<RegionFeature>,
    pub region_join: Option<JoinReport>,
}

impl ProjectFile {
    pub fn new(datasets: Datasets, joins: Joins, layers: Layers) -> Self {
        ProjectFile { version: FORMAT_VERSION.into(), datasets, joins, layers, map: MapSettings::default() }
    }

    /// Parses and validates a project document. A missing or unknown
    /// `version` is rejected before anything else is read.
    pub fn from_json(text: &[u8]) -> Result<Self> {
        let doc: Value = serde_json::from_slice(text)?;
        match doc.get("version") {
            Some(Value::String(v)) if v == FORMAT_VERSION => {}
            Some(Value::String(v)) => return Err(Error::UnsupportedVersion(v.clone())),
            Some(other) => return Err(Error::UnsupportedVersion(other.to_string())),
            None => return Err(Error::UnsupportedVersion("<missing>".into())),
        }
        let project: ProjectFile = serde_json::from_value(doc)?;
        project.validate()?;
        Ok(project)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read(path)?)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("project serializes");
        s.push('\n');
        s
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    /// Checks styles, settings and that every join field exists in its
    /// dataset.
    pub fn validate(&self) -> Result<()> {
        if self.version != FORMAT_VERSION {
            return Err(Error::UnsupportedVersion(self.version.clone()));
        }
        self.layers.nodes.validate("nodes")?;
        self.layers.flows.validate("flows")?;
        if self.layers.flows.width_range[0] <= 0.0 {
            return Err(Error::InvalidStyle("flows layer: minimum width must be positive".into()));
        }
        if let Some(regions) = &self.layers.regions {
            regions.validate("regions")?;
            if self.datasets.regions_geojson.is_none() {
                return Err(Error::UnresolvedJoin("regions layer configured without a regions dataset".into()));
            }
        }
        let m = &self.map;
        if m.width == 0 || m.height == 0 {
            return Err(Error::InvalidStyle(format!("canvas {}x{} is empty", m.width, m.height)));
        }
        if !(0.0..=1.0).contains(&m.dim_factor) || !(0.0..=1.0).contains(&m.background_opacity) {
            return Err(Error::InvalidStyle("dim factor and background opacity must lie in [0, 1]".into()));
        }

        let header = |text: &str, what: &str| {
            AttributeTable::from_csv(text.as_bytes())
                .map(|t| t.header)
                .map_err(|e| Error::UnresolvedJoin(format!("{what}: {e}")))
        };
        let require = |cols: &[String], field: &str, what: &str| {
            if cols.iter().any(|c| c == field) {
                Ok(())
            } else {
                Err(Error::UnresolvedJoin(format!("{what} has no column {field:?}; available: {cols:?}")))
            }
        };
        let node_cols = header(&self.datasets.nodes_csv, "nodes dataset")?;
        let j = &self.joins;
        for f in [&j.nodes.id, &j.nodes.x, &j.nodes.y] {
            require(&node_cols, f, "nodes dataset")?;
        }
        let flow_cols = header(&self.datasets.flows_csv, "flows dataset")?;
        for f in [&j.flows.origin, &j.flows.dest, &j.flows.value] {
            require(&flow_cols, f, "flows dataset")?;
        }
        if let Some(rj) = &j.regions {
            let text = self.datasets.region_attributes_csv.as_deref().ok_or_else(|| {
                Error::UnresolvedJoin("region join configured without a region attribute table".into())
            })?;
            require(&header(text, "region attribute table")?, &rj.table_id, "region attribute table")?;
        }
        Ok(())
    }

    /// Parses the datasets, builds the network and performs the region
    /// join. A region join that matches nothing is an error.
    pub fn resolve(&self) -> Result<ResolvedProject> {
        let nodes = parse_nodes_csv(self.datasets.nodes_csv.as_bytes(), &self.joins.nodes)?;
        let flows = parse_flows_csv(self.datasets.flows_csv.as_bytes(), &self.joins.flows)?;
        if nodes.is_empty() {
            return Err(Error::EmptyDataset("nodes".into()));
        }
        let network = FlowNetwork::build(nodes, flows)?;

        let mut regions = Vec::new();
        let mut region_join = None;
        if let Some(text) = &self.datasets.regions_geojson {
            let id_prop = self.joins.regions.as_ref().map(|j| j.feature_id.as_str());
            regions = parse_regions(text.as_bytes(), id_prop)
                .map_err(|e| Error::UnresolvedJoin(format!("regions dataset: {e}")))?;
            if let (Some(rj), Some(table_text)) = (&self.joins.regions, &self.datasets.region_attributes_csv) {
                let table = AttributeTable::from_csv(table_text.as_bytes())?;
                let (joined, report) = join_attributes(regions, &table, &rj.feature_id, &rj.table_id)
                    .map_err(|e| Error::UnresolvedJoin(e.to_string()))?;
                if report.matched == 0 && !joined.is_empty() {
                    return Err(Error::UnresolvedJoin(format!(
                        "{} = {}: {report}",
                        rj.feature_id, rj.table_id
                    )));
                }
                regions = joined;
                region_join = Some(report);
            }
        }
        Ok(ResolvedProject { network, regions, region_join })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal() -> ProjectFile {
        let flows = LayerStyle::new(Scaling::Proportional, [1.0, 8.0], ColorSpec::Single { color: Rgb(0, 0, 0) });
        let nodes = LayerStyle::new(Scaling::Proportional, [2.0, 6.0], ColorSpec::Single { color: Rgb(0, 0, 0) });
        ProjectFile::new(
            Datasets {
                nodes_csv: "id,X,Y\nA,0,0\nB,10,10\n".into(),
                flows_csv: "origin,dest,value\nA,B,3\n".into(),
                ..Default::default()
            },
            Joins::default(),
            Layers { regions: None, nodes, flows },
        )
    }

    #[test]
    fn json_round_trip() {
        let p = minimal();
        let back = ProjectFile::from_json(p.to_json().as_bytes()).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json(), p.to_json());
    }

    #[test]
    fn version_required() {
        let mut doc: Value = serde_json::from_str(&minimal().to_json()).unwrap();
        doc.as_object_mut().unwrap().remove("version");
        let text = serde_json::to_vec(&doc).unwrap();
        assert!(matches!(ProjectFile::from_json(&text), Err(Error::UnsupportedVersion(_))));
        doc["version"] = Value::from("2");
        let text = serde_json::to_vec(&doc).unwrap();
        assert!(matches!(ProjectFile::from_json(&text), Err(Error::UnsupportedVersion(v)) if v == "2"));
    }

    #[test]
    fn join_fields_must_exist() {
        let mut p = minimal();
        p.joins.flows.value = "volume".into();
        assert!(matches!(p.validate(), Err(Error::UnresolvedJoin(msg)) if msg.contains("volume")));
    }

    #[test]
    fn style_checks() {
        let mut p = minimal();
        p.layers.flows.width_range = [5.0, 5.0];
        assert!(matches!(p.validate(), Err(Error::InvalidStyle(_))));
        let mut p = minimal();
        p.layers.nodes.scaling = Scaling::Classified { method: ClassMethod::Manual, k: 3, breaks: Some(vec![2.0, 1.0]) };
        assert!(p.validate().is_err());
        let mut p = minimal();
        p.layers.nodes.color = ColorSpec::Classified { scheme: "Blues".into(), k: 12 };
        assert!(p.validate().is_err());
    }

    #[test]
    fn resolves_network() {
        let r = minimal().resolve().unwrap();
        assert_eq!(r.network.total(), 3.0);
        assert!(r.regions.is_empty() && r.region_join.is_none());
    }
}
