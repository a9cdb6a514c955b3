//! HTTP design service.
//!
//! | method | path                | body                 | response            |
//! |--------|---------------------|----------------------|---------------------|
//! | POST   | `/projects`         | project JSON         | `{"id": …}` (201)   |
//! | GET    | `/projects/{id}`    |                      | stored project JSON |
//! | POST   | `/render`           | [`RenderRequest`]    | `image/svg+xml`     |
//! | POST   | `/tools/poly2points`| GeoJSON              | `text/csv`          |
//! | POST   | `/tools/normalize`  | [`NormalizeRequest`] | `text/csv`          |
//! | GET    | `/health`           |                      | `{"status":"ok"}`   |
//!
//! Input errors answer 400 with `{"error": kind, "message": …}`; unknown
//! projects 404; bodies over the configured limit 413.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, Path as UrlPath, Query, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use tower_http::cors::{AllowOrigin, CorsLayer};

use super::tools::{normalize, poly2points, NormalizeOptions};
use crate::error::Error;
use crate::project::ProjectFile;
use crate::scene::{render_project, DEFAULT_DECIMALS};

pub const DEFAULT_MAX_BODY: usize = 50 * 1024 * 1024;
pub const MAX_BODY_ENV: &str = "ODFLOW_MAX_BODY";
pub const CORS_ORIGIN_ENV: &str = "ODFLOW_CORS_ORIGIN";

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub data_dir: PathBuf,
    pub max_body: usize,
    /// Allowed browser origin; `None` allows any.
    pub cors_origin: Option<String>,
}

impl ServiceConfig {
    pub fn new(data_dir: impl Into<PathBuf>) -> Self {
        ServiceConfig { data_dir: data_dir.into(), max_body: DEFAULT_MAX_BODY, cors_origin: None }
    }

    /// Reads `ODFLOW_MAX_BODY` (bytes) and `ODFLOW_CORS_ORIGIN`.
    pub fn from_env(data_dir: impl Into<PathBuf>) -> Result<Self, String> {
        let mut config = Self::new(data_dir);
        if let Ok(raw) = std::env::var(MAX_BODY_ENV) {
            config.max_body = raw.trim().parse().map_err(|_| format!("{MAX_BODY_ENV}={raw:?} is not a byte count"))?;
        }
        config.cors_origin = std::env::var(CORS_ORIGIN_ENV).ok().filter(|s| !s.is_empty());
        Ok(config)
    }
}

struct AppState {
    data_dir: PathBuf,
}

/// Inline project or stored project id, never both.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct RenderRequest {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub project: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub project_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selection: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimals: Option<usize>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct NormalizeRequest {
    pub flows_csv: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes_csv: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distances_csv: Option<String>,
    #[serde(default, flatten)]
    pub options: NormalizeOptions,
}

#[derive(Debug, Deserialize)]
struct Poly2PointsQuery {
    id_property: Option<String>,
}

enum ApiError {
    BadRequest(Value),
    NotFound(String),
    Internal(String),
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            ApiError::BadRequest(diagnostics(&e))
        } else {
            ApiError::Internal(e.to_string())
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        match self {
            ApiError::BadRequest(body) => (StatusCode::BAD_REQUEST, Json(body)).into_response(),
            ApiError::NotFound(what) => {
                (StatusCode::NOT_FOUND, Json(json!({"error": "not_found", "message": what}))).into_response()
            }
            ApiError::Internal(msg) => {
                (StatusCode::INTERNAL_SERVER_ERROR, Json(json!({"error": "internal", "message": msg}))).into_response()
            }
        }
    }
}

fn bad_request(kind: &str, message: impl Into<String>) -> ApiError {
    ApiError::BadRequest(json!({"error": kind, "message": message.into()}))
}

/// Error kind and message, plus row-level details where the error has them.
pub fn diagnostics(e: &Error) -> Value {
    let mut body = json!({"error": e.kind(), "message": e.to_string()});
    let details = match e {
        Error::UnknownNodeReference(rows) => Some(
            rows.iter()
                .map(|r| json!({"row": r.row, "origin": r.origin, "dest": r.dest, "missing": r.missing}))
                .collect::<Value>(),
        ),
        Error::DuplicateNodeId { id, record } => Some(json!({"id": id, "record": record})),
        Error::NonNumericValue { record, column, value } => {
            Some(json!({"record": record, "column": column, "value": value}))
        }
        Error::MissingColumn { column, available } => Some(json!({"column": column, "available": available})),
        Error::CoordinateOutOfRange { record, lon, lat } => Some(json!({"record": record, "lon": lon, "lat": lat})),
        Error::NonNegativeViolation { record, column, value } => {
            Some(json!({"record": record, "column": column, "value": value}))
        }
        Error::NoConvergence(m) => Some(json!({"iterations": m.iterations, "residual": m.residual})),
        _ => None,
    };
    if let Some(d) = details {
        body["details"] = d;
    }
    body
}

pub fn router(config: &ServiceConfig) -> Router {
    let state = Arc::new(AppState { data_dir: config.data_dir.clone() });
    let cors = match &config.cors_origin {
        Some(origin) => match HeaderValue::from_str(origin) {
            Ok(v) => CorsLayer::new().allow_origin(AllowOrigin::exact(v)),
            Err(_) => CorsLayer::new(),
        },
        None => CorsLayer::new().allow_origin(AllowOrigin::any()),
    }
    .allow_methods([axum::http::Method::GET, axum::http::Method::POST])
    .allow_headers([header::CONTENT_TYPE]);

    Router::new()
        .route("/health", get(health))
        .route("/projects", post(store_project))
        .route("/projects/{id}", get(fetch_project))
        .route("/render", post(render))
        .route("/tools/poly2points", post(tool_poly2points))
        .route("/tools/normalize", post(tool_normalize))
        .layer(DefaultBodyLimit::max(config.max_body))
        .layer(cors)
        .with_state(state)
}

/// Binds `0.0.0.0:port` and serves until Ctrl-C.
pub async fn serve(port: u16, config: ServiceConfig) -> std::io::Result<()> {
    std::fs::create_dir_all(&config.data_dir)?;
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    eprintln!("odflow: listening on {}", listener.local_addr()?);
    axum::serve(listener, router(&config))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

async fn health() -> Json<Value> {
    Json(json!({"status": "ok"}))
}

fn is_project_id(id: &str) -> bool {
    id.len() == 64 && id.bytes().all(|b| b.is_ascii_hexdigit() && !b.is_ascii_uppercase())
}

fn project_path(dir: &Path, id: &str) -> PathBuf {
    dir.join(format!("{id}.json"))
}

/// Stores the posted bytes verbatim under their SHA-256, written to a
/// temporary file and renamed into place.
async fn store_project(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    ProjectFile::from_json(&body)?;
    let id = hex::encode(Sha256::digest(&body));
    let dir = state.data_dir.clone();
    let target = project_path(&dir, &id);
    tokio::task::spawn_blocking(move || -> std::io::Result<()> {
        std::fs::create_dir_all(&dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
        tmp.write_all(&body)?;
        tmp.as_file().sync_all()?;
        tmp.persist(&target).map_err(|e| e.error)?;
        Ok(())
    })
    .await
    .map_err(|e| ApiError::Internal(e.to_string()))?
    .map_err(|e| ApiError::Internal(e.to_string()))?;
    Ok((StatusCode::CREATED, Json(json!({"id": id}))).into_response())
}

async fn read_project(dir: &Path, id: &str) -> Result<Vec<u8>, ApiError> {
    if !is_project_id(id) {
        return Err(ApiError::NotFound(format!("project {id:?}")));
    }
    match tokio::fs::read(project_path(dir, id)).await {
        Ok(bytes) => Ok(bytes),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Err(ApiError::NotFound(format!("project {id:?}"))),
        Err(e) => Err(ApiError::Internal(e.to_string())),
    }
}

async fn fetch_project(State(state): State<Arc<AppState>>, UrlPath(id): UrlPath<String>) -> Result<Response, ApiError> {
    let bytes = read_project(&state.data_dir, &id).await?;
    Ok(([(header::CONTENT_TYPE, "application/json")], bytes).into_response())
}

async fn render(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    let req: RenderRequest =
        serde_json::from_slice(&body).map_err(|e| bad_request("invalid_request", e.to_string()))?;
    let bytes = match (req.project, req.project_id) {
        (Some(inline), None) => serde_json::to_vec(&inline).map_err(|e| ApiError::Internal(e.to_string()))?,
        (None, Some(id)) => read_project(&state.data_dir, &id).await?,
        _ => return Err(bad_request("invalid_request", "give exactly one of \"project\" and \"project_id\"")),
    };
    let decimals = req.decimals.unwrap_or(DEFAULT_DECIMALS);
    let selection = req.selection;
    let svg = tokio::task::spawn_blocking(move || {
        let project = ProjectFile::from_json(&bytes)?;
        render_project(&project, selection.as_deref(), decimals)
    })
    .await
    .map_err(|e| ApiError::Internal(e.to_string()))??;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], svg).into_response())
}

async fn tool_poly2points(Query(q): Query<Poly2PointsQuery>, body: Bytes) -> Result<Response, ApiError> {
    let csv = tokio::task::spawn_blocking(move || poly2points(&body, q.id_property.as_deref()))
        .await
        .map_err(|e| ApiError::Internal(e.to_string()))??;
    Ok(([(header::CONTENT_TYPE, "text/csv")], csv).into_response())
}

async fn tool_normalize(body: Bytes) -> Result<Response, ApiError> {
    let req: NormalizeRequest =
        serde_json::from_slice(&body).map_err(|e| bad_request("invalid_request", e.to_string()))?;
    let csv = tokio::task::spawn_blocking(move || {
        normalize(
            req.flows_csv.as_bytes(),
            req.nodes_csv.as_deref().map(str::as_bytes),
            req.distances_csv.as_deref().map(str::as_bytes),
            &req.options,
        )
    })
    .await
    .map_err(|e| ApiError::Internal(e.to_string()))??;
    Ok(([(header::CONTENT_TYPE, "text/csv")], csv).into_response())
}
