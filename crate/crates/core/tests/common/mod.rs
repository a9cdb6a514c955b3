#![allow(dead_code)]

use std::path::PathBuf;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use odflow::ingest::{parse_flows_csv, parse_nodes_csv, FlowFields, NodeFields};
use odflow::shell::{router, ServiceConfig};
use odflow::{FlowNetwork, FlowRecord, NodeRecord, ProjectFile};
use tower::ServiceExt;

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

pub fn read_fixture(rel: &str) -> String {
    std::fs::read_to_string(fixture(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub const PROJECT_FIXTURES: [&str; 3] =
    ["banana/banana.project.json", "projects/migration.project.json", "projects/bike.project.json"];

pub fn load_project(rel: &str) -> ProjectFile {
    ProjectFile::load(fixture(rel)).unwrap()
}

pub fn banana_network() -> FlowNetwork {
    let nodes = parse_nodes_csv(
        read_fixture("banana/nodes.csv").as_bytes(),
        &NodeFields { id: "Country_ID".into(), x: "X".into(), y: "Y".into() },
    )
    .unwrap();
    let flows = parse_flows_csv(
        read_fixture("banana/flows.csv").as_bytes(),
        &FlowFields { origin: "From_Country_ID".into(), dest: "To_Country_ID".into(), value: "Value".into() },
    )
    .unwrap();
    FlowNetwork::build(nodes, flows).unwrap()
}

/// Network over nodes at the origin from `(origin, dest, value)` triples.
pub fn network(flows: &[(&str, &str, f64)]) -> FlowNetwork {
    let mut ids: Vec<&str> = Vec::new();
    for &(o, d, _) in flows {
        for id in [o, d] {
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
    }
    let nodes = ids.iter().map(|id| NodeRecord::new(*id, 0.0, 0.0)).collect();
    let flows = flows.iter().map(|&(o, d, v)| FlowRecord::new(o, d, v)).collect();
    FlowNetwork::build(nodes, flows).unwrap()
}

/// Figure-style four-flow instance: A↔B and A↔C.
pub fn four_flows() -> FlowNetwork {
    network(&[("A", "B", 4.0), ("B", "A", 2.0), ("A", "C", 1.0), ("C", "A", 3.0)])
}

pub struct Reply {
    pub status: StatusCode,
    pub content_type: Option<String>,
    pub body: Vec<u8>,
}

impl Reply {
    pub fn text(&self) -> String {
        String::from_utf8(self.body.clone()).unwrap()
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::from_slice(&self.body).unwrap()
    }
}

pub async fn call(config: &ServiceConfig, method: &str, uri: &str, body: impl Into<Body>) -> Reply {
    let request = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.into())
        .unwrap();
    let response = router(config).oneshot(request).await.unwrap();
    let status = response.status();
    let content_type = response.headers().get("content-type").map(|v| v.to_str().unwrap().to_string());
    let body = response.into_body().collect().await.unwrap().to_bytes().to_vec();
    Reply { status, content_type, body }
}

pub fn odflow_bin() -> std::process::Command {
    std::process::Command::new(env!("CARGO_BIN_EXE_odflow"))
}
