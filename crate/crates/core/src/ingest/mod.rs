//! Input parsing and preparation: node/flow CSV tables, GeoJSON regions,
//! attribute joins and the polygons-to-points conversion.
//!
//! CSV dialect: comma delimiter, optional double-quote quoting, a header row,
//! LF or CRLF line endings. Cells are trimmed. Numbers are plain decimals;
//! thousands separators are rejected.

mod centroid;
mod geojson;
mod join;
mod tables;

pub use centroid::{polygon_centroid, polygons_to_points, region_centroid};
pub use geojson::parse_regions;
pub use join::{join_attributes, JoinReport};
pub use tables::{
    parse_flows_csv, parse_nodes_csv, points_to_csv, write_flows_csv, write_nodes_csv, AttributeTable, FlowFields,
    NodeFields,
};
