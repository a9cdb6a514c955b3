//! Layered map scene: composition from a project and SVG output.
//!
//! Layers are drawn in a fixed order: background, regions, flows, nodes,
//! legends, then map elements (title, north arrow, projection label and
//! custom labels).

mod legend;
mod svg;
mod symbol;
mod view;

use std::num::NonZeroUsize;

use crate::analytics::{filter_top_n, node_stats};
use crate::classify::{legend_values, Rgb};
use crate::error::{Error, Result};
use crate::geometry::{flow_path, FlowPathInput, PathSpec, Point};
use crate::model::{AttrValue, FlowRecord};
use crate::project::{Corner, ProjectFile, ResolvedProject};

pub use legend::{build_legend, Glyph, Legend, LegendEntry, LegendLayer};
pub use svg::{to_svg, DEFAULT_DECIMALS};
pub use view::{ViewTransform, MERCATOR_CLAMP, PADDING};

use symbol::Symbolizer;
use view::Extent;

/// Fill used for regions without a value for the mapped attribute.
pub const NO_DATA: Rgb = Rgb(0xD9, 0xD9, 0xD9);

/// Names a node layer `field` may use when the node table lacks a column
/// of that name.
pub const NODE_STATISTICS: [&str; 5] = ["inflow", "outflow", "gross", "net", "net_ratio"];

#[derive(Debug, Clone, PartialEq)]
pub struct Paint {
    pub fill: Rgb,
    pub fill_opacity: f64,
    pub stroke: Rgb,
    pub stroke_width: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionElement {
    pub id: String,
    /// Screen rings, every polygon's exterior and holes, filled even-odd.
    pub rings: Vec<Vec<Point>>,
    pub value: Option<f64>,
    pub paint: Paint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowElement {
    pub origin: String,
    pub dest: String,
    pub value: f64,
    pub path: PathSpec,
    pub dimmed: bool,
    pub paint: Paint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeElement {
    pub id: String,
    pub center: Point,
    pub radius: f64,
    pub value: f64,
    pub paint: Paint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TextElement {
    pub text: String,
    pub at: Point,
    pub size: f64,
    /// SVG `text-anchor`.
    pub anchor: &'static str,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MapElements {
    pub title: Option<TextElement>,
    /// Tip-to-base center of the north arrow glyph and its height.
    pub north_arrow: Option<(Point, f64)>,
    pub projection_label: Option<TextElement>,
    pub labels: Vec<TextElement>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SceneDocument {
    pub width: u32,
    pub height: u32,
    pub background: Rgb,
    pub background_opacity: f64,
    pub regions: Vec<RegionElement>,
    pub flows: Vec<FlowElement>,
    pub nodes: Vec<NodeElement>,
    pub legends: Vec<Legend>,
    pub elements: MapElements,
}

impl SceneDocument {
    pub fn empty(width: u32, height: u32, background: Rgb) -> Self {
        SceneDocument {
            width,
            height,
            background,
            background_opacity: 1.0,
            regions: Vec::new(),
            flows: Vec::new(),
            nodes: Vec::new(),
            legends: Vec::new(),
            elements: MapElements::default(),
        }
    }
}

/// Validates, resolves and composes `project`, then serializes it. This is
/// the single rendering path shared by the CLI and the service.
pub fn render_project(project: &ProjectFile, selection: Option<&str>, decimals: usize) -> Result<String> {
    if !(1..=6).contains(&decimals) {
        return Err(Error::InvalidStyle(format!("decimals must be 1 to 6, got {decimals}")));
    }
    let scene = compose(project, selection)?;
    Ok(to_svg(&scene, decimals))
}

/// Builds the scene for `project`. With a `selection`, flows not incident
/// to that node are drawn at `dim_factor` times their opacity.
pub fn compose(project: &ProjectFile, selection: Option<&str>) -> Result<SceneDocument> {
    project.validate()?;
    let resolved = project.resolve()?;
    compose_resolved(project, &resolved, selection)
}

pub fn compose_resolved(project: &ProjectFile, data: &ResolvedProject, selection: Option<&str>) -> Result<SceneDocument> {
    let map = &project.map;
    let net = &data.network;
    if let Some(id) = selection {
        if net.node(id).is_none() {
            return Err(Error::UnresolvedJoin(format!("selected node {id:?} is not in the nodes dataset")));
        }
    }

    // Fit every region vertex and node into the canvas.
    let projection = map.projection;
    let mut extent = Extent::new();
    for region in &data.regions {
        for polygon in &region.polygons {
            for ring in polygon.rings() {
                for &[lon, lat] in ring {
                    let (x, y) = ViewTransform::map_point(&projection, lon, lat)?;
                    extent.add(x, y);
                }
            }
        }
    }
    for node in net.nodes() {
        let (x, y) = ViewTransform::map_point(&projection, node.lon, node.lat)?;
        extent.add(x, y);
    }
    let view = ViewTransform::fit(projection, extent.bbox(), f64::from(map.width), f64::from(map.height));

    let mut scene = SceneDocument::empty(map.width, map.height, map.background);
    scene.background_opacity = map.background_opacity;

    // Regions.
    let mut legend_specs = Vec::new();
    if let Some(style) = project.layers.regions.as_ref().filter(|s| s.visible) {
        let values: Vec<Option<f64>> = data
            .regions
            .iter()
            .map(|r| style.field.as_deref().and_then(|f| r.attributes.get_f64(f)))
            .collect();
        let present: Vec<f64> = values.iter().flatten().copied().collect();
        let sym = Symbolizer::new(style, &present)?;
        for (region, value) in data.regions.iter().zip(&values) {
            let mut rings = Vec::new();
            for polygon in &region.polygons {
                for ring in polygon.rings() {
                    rings.push(ring.iter().map(|&[lon, lat]| view.project(lon, lat)).collect::<Result<Vec<_>>>()?);
                }
            }
            scene.regions.push(RegionElement {
                id: region.id.clone(),
                rings,
                value: *value,
                paint: Paint {
                    fill: value.map_or(NO_DATA, |v| sym.color(v)),
                    fill_opacity: style.opacity,
                    stroke: style.stroke.color,
                    stroke_width: style.stroke.width,
                },
            });
        }
        if style.legend.visible && !present.is_empty() {
            legend_specs.push((LegendLayer::Regions, style, sym, present));
        }
    }

    // Node symbols.
    let node_style = &project.layers.nodes;
    let node_values = node_values(data, node_style.field.as_deref())?;
    let node_sym = Symbolizer::new(node_style, &node_values)?;
    let hidden = !node_style.visible || (node_style.stroke.width == 0.0 && node_style.opacity == 0.0);
    let mut centers = Vec::with_capacity(net.nodes().len());
    let mut radii = Vec::with_capacity(net.nodes().len());
    for (node, &value) in net.nodes().iter().zip(&node_values) {
        let center = view.project(node.lon, node.lat)?;
        let radius = if node_style.visible { node_sym.size(value) } else { 0.0 };
        centers.push(center);
        radii.push(radius);
        if !hidden {
            scene.nodes.push(NodeElement {
                id: node.id.clone(),
                center,
                radius,
                value,
                paint: Paint {
                    fill: node_sym.color(value),
                    fill_opacity: node_style.opacity,
                    stroke: node_style.stroke.color,
                    stroke_width: node_style.stroke.width,
                },
            });
        }
    }
    // Large circles first so small ones stay visible.
    scene.nodes.sort_by(|a, b| b.radius.total_cmp(&a.radius));

    // Flows, largest first.
    let flow_style = &project.layers.flows;
    if flow_style.visible {
        let drawable: Vec<FlowRecord> = net.flows().iter().filter(|f| !f.is_self_flow()).cloned().collect();
        let values: Vec<f64> = drawable.iter().map(|f| f.value).collect();
        let sym = Symbolizer::new(flow_style, &values)?;
        let shown = match NonZeroUsize::new(drawable.len()) {
            Some(all) => filter_top_n(&drawable, flow_style.top_n.unwrap_or(all)),
            None => Vec::new(),
        };
        for flow in shown {
            let (o, d) = (net.node_index(&flow.origin).unwrap(), net.node_index(&flow.dest).unwrap());
            let input = FlowPathInput::new(centers[o], centers[d], sym.size(flow.value), radii[o], radii[d])
                .with_rule(flow_style.traffic_rule)
                .with_mode(flow_style.path_mode);
            let Some(path) = flow_path(flow_style.flow_style, &input) else {
                continue;
            };
            let dimmed = selection.is_some_and(|id| flow.origin != id && flow.dest != id);
            let opacity = if dimmed { flow_style.opacity * map.dim_factor } else { flow_style.opacity };
            scene.flows.push(FlowElement {
                paint: Paint {
                    fill: sym.color(flow.value),
                    fill_opacity: opacity,
                    stroke: flow_style.stroke.color,
                    stroke_width: flow_style.stroke.width,
                },
                origin: flow.origin,
                dest: flow.dest,
                value: flow.value,
                path,
                dimmed,
            });
        }
        if flow_style.legend.visible && !values.is_empty() {
            legend_specs.push((LegendLayer::Flows, flow_style, sym, values));
        }
    }
    if !hidden && node_style.legend.visible && !node_values.is_empty() {
        legend_specs.push((LegendLayer::Nodes, node_style, node_sym, node_values));
    }

    // Legends sit side by side along the bottom edge.
    let mut x = map.legend_offset[0];
    for (layer, style, sym, values) in legend_specs {
        let anchors = legend_values(&values, &sym.scale, style.legend.decimals);
        let mut legend = build_legend(layer, &anchors, style, &values)?;
        legend.origin = Point::new(x, f64::from(map.height) - map.legend_offset[1] - legend.height());
        x += legend.width() + legend::SPACING;
        scene.legends.push(legend);
    }

    scene.elements = map_elements(project, &view)?;
    Ok(scene)
}

fn node_values(data: &ResolvedProject, field: Option<&str>) -> Result<Vec<f64>> {
    let net = &data.network;
    let Some(field) = field else {
        return Ok(vec![0.0; net.nodes().len()]);
    };
    let has_column = net.nodes().iter().any(|n| n.attributes.get(field).is_some());
    if !has_column && NODE_STATISTICS.contains(&field) {
        return Ok(node_stats(net, None)?
            .into_iter()
            .map(|s| match field {
                "inflow" => s.inflow,
                "outflow" => s.outflow,
                "gross" => s.gross,
                "net" => s.net,
                _ => s.net_ratio,
            })
            .collect());
    }
    net.nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| match n.attributes.get(field) {
            Some(v) => v.as_f64().ok_or_else(|| Error::NonNumericValue {
                record: i as u64 + 1,
                column: field.to_string(),
                value: v.to_string(),
            }),
            None => Err(Error::MissingColumn {
                column: field.to_string(),
                available: n.attributes.keys().map(str::to_string).chain(NODE_STATISTICS.map(String::from)).collect(),
            }),
        })
        .collect()
}

fn map_elements(project: &ProjectFile, view: &ViewTransform) -> Result<MapElements> {
    let map = &project.map;
    let (w, h) = (f64::from(map.width), f64::from(map.height));
    let mut out = MapElements::default();
    if let Some(title) = map.title.as_ref().filter(|t| !t.is_empty()) {
        out.title = Some(TextElement { text: title.clone(), at: Point::new(w / 2.0, 28.0), size: 20.0, anchor: "middle" });
    }
    if map.north_arrow {
        let (inset, size) = (36.0, 28.0);
        let at = match map.north_arrow_corner {
            Corner::TopLeft => Point::new(inset, inset),
            Corner::TopRight => Point::new(w - inset, inset),
            Corner::BottomLeft => Point::new(inset, h - inset - size),
            Corner::BottomRight => Point::new(w - inset, h - inset - size),
        };
        out.north_arrow = Some((at, size));
    }
    if map.projection_label {
        out.projection_label = Some(TextElement {
            text: map.projection.display_name(),
            at: Point::new(w - 10.0, h - 10.0),
            size: 11.0,
            anchor: "end",
        });
    }
    for label in &map.labels {
        out.labels.push(TextElement {
            text: label.text.clone(),
            at: view.project(label.lon, label.lat)?,
            size: label.size,
            anchor: "middle",
        });
    }
    Ok(out)
}

/// Numeric data attribute text: shortest round-trip form.
pub(crate) fn data_number(v: f64) -> String {
    AttrValue::Number(v).to_string()
}
