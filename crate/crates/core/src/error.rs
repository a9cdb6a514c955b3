use thiserror::Error;

use crate::analytics::ExpectedFlowMatrix;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A flow row that names a node missing from the node table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownReference {
    /// Zero-based index of the flow in the input list.
    pub row: usize,
    pub origin: String,
    pub dest: String,
    /// Which of the two endpoints failed to resolve.
    pub missing: Vec<String>,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{} flow row(s) reference unknown nodes: {}", .0.len(), describe_unknown(.0))]
    UnknownNodeReference(Vec<UnknownReference>),

    /// `record` is the 1-based data record number.
    #[error("duplicate node id {id:?} (record {record})")]
    DuplicateNodeId { id: String, record: u64 },

    #[error("record {record}: column {column:?} has non-numeric value {value:?}")]
    NonNumericValue { record: u64, column: String, value: String },

    #[error("missing column {column:?}; available: {available:?}")]
    MissingColumn { column: String, available: Vec<String> },

    #[error("record {record}: coordinate ({lon}, {lat}) is outside WGS84 bounds")]
    CoordinateOutOfRange { record: u64, lon: f64, lat: f64 },

    #[error("record {record}: value {value} in column {column:?} is negative")]
    NonNegativeViolation { record: u64, column: String, value: f64 },

    #[error("record {record}: empty id in column {column:?}")]
    EmptyId { record: u64, column: String },

    #[error("CSV error at {position}: {message}")]
    Csv { position: String, message: String },

    #[error("malformed GeoJSON: {0}")]
    MalformedGeoJson(String),

    #[error("feature {feature}: unsupported geometry type {kind:?} in a region file")]
    UnsupportedGeometryType { feature: usize, kind: String },

    #[error("attribute table key {key:?} in column {column:?} appears more than once")]
    AmbiguousKey { column: String, key: String },

    #[error("region {id:?} has zero total area")]
    DegenerateGeometry { id: String },

    #[error("node {node:?}: population attribute {attr:?} is not a positive number")]
    NonPositivePopulation { node: String, attr: String },

    #[error("gravity model did not converge after {} iterations (residual {:e})", .0.iterations, .0.residual)]
    NoConvergence(Box<ExpectedFlowMatrix>),

    #[error("expected-flow denominator is zero: every flow stays within its own location")]
    ZeroDenominator,

    #[error("distance between {origin:?} and {dest:?} is not strictly positive")]
    ZeroDistance { origin: String, dest: String },

    #[error("expected-flow matrix covers different nodes than the network")]
    MismatchedExpectation,

    #[error("network has no flow volume")]
    EmptyNetwork,

    #[error("gravity model needs a distance for every ordered pair: {0}")]
    MissingDistance(String),

    #[error("{method} with {classes} classes needs at least {classes} distinct values, found {distinct}")]
    TooFewDistinctValues { method: &'static str, classes: usize, distinct: usize },

    #[error("manual break {value} is outside the data range or out of order")]
    BreaksOutOfRange { value: f64 },

    #[error("invalid style: {0}")]
    InvalidStyle(String),

    #[error("unknown color scheme {0:?}")]
    UnknownScheme(String),

    #[error("latitude {lat} is at or beyond the pole for this projection")]
    PoleSingularity { lat: f64 },

    #[error("invalid projection parameters: {0}")]
    InvalidProjection(String),

    #[error("unresolved join: {0}")]
    UnresolvedJoin(String),

    #[error("empty dataset: {0}")]
    EmptyDataset(String),

    #[error("unsupported project version {0:?}")]
    UnsupportedVersion(String),

    #[error("project JSON: {0}")]
    ProjectJson(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable snake_case name of the variant, used in service diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnknownNodeReference { .. } => "unknown_node_reference",
            Error::DuplicateNodeId { .. } => "duplicate_node_id",
            Error::NonNumericValue { .. } => "non_numeric_value",
            Error::MissingColumn { .. } => "missing_column",
            Error::CoordinateOutOfRange { .. } => "coordinate_out_of_range",
            Error::NonNegativeViolation { .. } => "non_negative_violation",
            Error::EmptyId { .. } => "empty_id",
            Error::Csv { .. } => "csv",
            Error::MalformedGeoJson { .. } => "malformed_geojson",
            Error::UnsupportedGeometryType { .. } => "unsupported_geometry_type",
            Error::AmbiguousKey { .. } => "ambiguous_key",
            Error::DegenerateGeometry { .. } => "degenerate_geometry",
            Error::NonPositivePopulation { .. } => "non_positive_population",
            Error::NoConvergence { .. } => "no_convergence",
            Error::ZeroDenominator => "zero_denominator",
            Error::ZeroDistance { .. } => "zero_distance",
            Error::MismatchedExpectation => "mismatched_expectation",
            Error::EmptyNetwork => "empty_network",
            Error::MissingDistance { .. } => "missing_distance",
            Error::TooFewDistinctValues { .. } => "too_few_distinct_values",
            Error::BreaksOutOfRange { .. } => "breaks_out_of_range",
            Error::InvalidStyle { .. } => "invalid_style",
            Error::UnknownScheme { .. } => "unknown_scheme",
            Error::PoleSingularity { .. } => "pole_singularity",
            Error::InvalidProjection { .. } => "invalid_projection",
            Error::UnresolvedJoin { .. } => "unresolved_join",
            Error::EmptyDataset { .. } => "empty_dataset",
            Error::UnsupportedVersion { .. } => "unsupported_version",
            Error::ProjectJson { .. } => "project_json",
            Error::Io { .. } => "io",
        }
    }

    /// True for errors caused by user input, as opposed to I/O failures.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}

fn describe_unknown(rows: &[UnknownReference]) -> String {
    rows.iter()
        .take(10)
        .map(|r| format!("row {} ({} -> {}) missing {}", r.row, r.origin, r.dest, r.missing.join(", ")))
        .collect::<Vec<_>>()
        .join("; ")
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        let position = match err.position() {
            Some(p) => format!("line {}, byte {}", p.line(), p.byte()),
            None => "unknown position".to_string(),
        };
        let message = match err.kind() {
            csv::ErrorKind::UnequalLengths { expected_len, len, .. } => {
                format!("row has {len} fields, header has {expected_len}")
            }
            csv::ErrorKind::Utf8 { .. } => "invalid UTF-8".to_string(),
            _ => err.to_string(),
        };
        Error::Csv { position, message }
    }
}
