//! Drives the HTTP service in process: create a session, generate, paint a
//! stroke and look up a color.
//!
//! ```text
//! cargo run --example service_session -- [checkpoint]
//! ```

use axum::body::Body;
use axum::http::{Request, StatusCode};
use base64::engine::general_purpose::STANDARD as B64;
use base64::Engine as _;
use hairgen::generator::Model;
use hairgen::imageio;
use hairgen::service::{router, AppState, ReferenceLibrary};
use hairgen::training::synth_dataset;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &axum::Router, method: &str, uri: &str, body: Option<Value>) -> anyhow::Result<(StatusCode, Value)> {
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let req = req.body(body.map(|b| Body::from(b.to_string())).unwrap_or_else(Body::empty))?;
    let resp = app.clone().oneshot(req).await?;
    let status = resp.status();
    let bytes = resp.into_body().collect().await?.to_bytes();
    Ok((status, serde_json::from_slice(&bytes)?))
}

#[tokio::main]
async fn main() -> anyhow::Result<()> {
    let ckpt = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/reference/full/model.mgan").into());
    let state = AppState::new(ReferenceLibrary::synthetic(20, 0), Some(Model::load(&ckpt)?));
    let app = router(state);

    let s = &synth_dataset(1, 42)[0];
    let body = json!({
        "image": B64.encode(imageio::encode_rgb(&s.image, 0)?),
        "mask": B64.encode(imageio::encode_mask(&s.mask, 0)?),
    });
    let (st, v) = call(&app, "POST", "/session", Some(body)).await?;
    println!("POST /session -> {st} id={}", v["id"]);
    let id = v["id"].as_str().unwrap_or_default().to_string();

    let (st, v) = call(&app, "POST", &format!("/session/{id}/generate"), Some(json!({ "appearance_rgb": "A0522D" }))).await?;
    println!("generate -> {st}, appearance reference {}", v["appearance_ref_id"]);

    let stroke = json!([{ "points": [[10, 32], [54, 32]], "radius": 1.5 }]);
    let (st, v) = call(&app, "POST", &format!("/session/{id}/strokes"), Some(stroke)).await?;
    println!("strokes -> {st}, hole fraction {:.3}", v["hole_fraction"].as_f64().unwrap_or(0.0));

    let (st, v) = call(&app, "GET", "/appearance/knn?rgb=A0522D&k=3", None).await?;
    println!("knn -> {st}: {v}");
    let (_, v) = call(&app, "POST", "/session/nope/generate", Some(json!({}))).await?;
    println!("unknown session -> {v}");
    Ok(())
}
