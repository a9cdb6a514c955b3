//! Origin-destination flow map engine.
//!
//! The crate turns a node table, a flow table and optional region polygons
//! into a layered SVG flow map. Around the renderer sit the analytic tools a
//! flow cartographer needs: per-node gross/net statistics, expected-flow null
//! models (adjusted volume and a doubly-constrained gravity model), the
//! modularity transform, class-break computation and map projections.
//!
//! The pipeline in one breath:
//!
//! ```text
//! ingest (CSV/GeoJSON) -> model::FlowNetwork -> analytics / classify
//!                                            -> geometry (projection, flow paths)
//!                                            -> scene (compose) -> SVG
//! ```
//!
//! A [`project::ProjectFile`] bundles datasets, joins and symbology into one
//! JSON document; [`scene::render_project`] is the single entry point used by
//! the command line tool and the HTTP service alike.
//!
//! Runnable examples live in the crate's `examples/` directory, one per major
//! capability (`cargo run -p odflow --example banana_trade`).

// Negated comparisons are how NaN gets rejected alongside out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod analytics;
pub mod classify;
pub mod error;
pub mod geometry;
pub mod ingest;
pub mod model;
pub mod numeric;
pub mod project;
pub mod scene;
pub mod shell;

mod schemes;

pub use error::{Error, Result};
pub use model::{AttrValue, Attributes, FlowNetwork, FlowRecord, NodeRecord, Polygon, RegionFeature};
pub use project::ProjectFile;
