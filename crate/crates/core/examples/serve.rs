//! The HTTP design service. By default the example exercises the routes
//! in-process and exits; pass `--listen [port]` to serve for real.
//!
//! `cargo run -p odflow --example serve [-- --listen 8080]`

use axum::body::Body;
use axum::http::Request;
use http_body_util::BodyExt;
use odflow::shell::{router, serve, ServiceConfig};
use tower::ServiceExt;

#[tokio::main]
async fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let data_dir = std::env::temp_dir().join("odflow-example-store");
    let config = ServiceConfig::from_env(&data_dir)?;

    if args.first().map(String::as_str) == Some("--listen") {
        let port = args.get(1).map_or(Ok(8080), |p| p.parse())?;
        serve(port, config).await?;
        return Ok(());
    }

    let project = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/projects/bike.project.json"))?;
    let send = |method: &str, uri: &str, body: String| {
        let request = Request::builder()
            .method(method)
            .uri(uri)
            .header("content-type", "application/json")
            .body(Body::from(body))
            .unwrap();
        router(&config).oneshot(request)
    };

    let reply = send("GET", "/health", String::new()).await?;
    println!("GET /health -> {}", reply.status());

    let reply = send("POST", "/projects", project).await?;
    let status = reply.status();
    let body: serde_json::Value = serde_json::from_slice(&reply.into_body().collect().await?.to_bytes())?;
    println!("POST /projects -> {status} {body}");

    let render = serde_json::json!({"project_id": body["id"], "decimals": 2}).to_string();
    let reply = send("POST", "/render", render).await?;
    let status = reply.status();
    let svg = reply.into_body().collect().await?.to_bytes();
    println!("POST /render -> {status}, {} bytes of SVG", svg.len());
    Ok(())
}
