//! Command line interface and HTTP service. Both render through
//! [`crate::scene::render_project`], so the same project yields the same
//! bytes either way.

mod cli;
pub mod service;
mod tools;

pub use cli::{run, Cli, Command, NormalizeArgs, Tool, EXIT_INPUT, EXIT_INTERNAL};
pub use service::{router, serve, NormalizeRequest, RenderRequest, ServiceConfig};
pub use tools::{normalize, poly2points, ModelKind, NormalizeOptions};
