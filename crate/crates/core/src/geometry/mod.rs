//! Map projections and flow symbol construction.

mod flow_path;
mod projection;

pub use flow_path::{
    arrow_constants, flow_path, ArrowConstants, FlowPathInput, FlowStyle, PathCommand, PathMode, PathPoints, PathSpec,
    Point, TrafficRule,
};
pub use projection::{AlbersParams, AlbersPreset, ProjectionSpec, ROBINSON_TABLE};
