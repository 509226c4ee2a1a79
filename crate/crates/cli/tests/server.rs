use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use qpmut_cli::config::Settings;
use qpmut_cli::server::router;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json");
    let req = req
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_string())))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (
        status,
        serde_json::from_slice(&bytes).unwrap_or(Value::Null),
    )
}

#[tokio::test]
async fn upload_mutate_and_history() {
    let app = router(Settings::default());
    let (s, v) = call(&app, "POST", "/qps", Some(json!({ "fixture": "HEX" }))).await;
    assert_eq!(s, StatusCode::CREATED);
    let id = v["id"].as_str().unwrap().to_string();

    let (s, doc) = call(&app, "GET", &format!("/qps/{id}"), None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(doc["arrows"].as_array().unwrap().len(), 6);

    let (s, m) = call(
        &app,
        "POST",
        &format!("/qps/{id}/mutate"),
        Some(json!({ "vertices": ["1", "3", "5"] })),
    )
    .await;
    assert_eq!(s, StatusCode::CREATED);
    assert_eq!(m["parent"], id.as_str());
    assert_eq!(m["document"]["arrows"].as_array().unwrap().len(), 9);
    assert_eq!(m["document"]["potential"].as_array().unwrap().len(), 4);
    let golden: Value = serde_json::from_str(include_str!("golden/hex_mu135.qp.json")).unwrap();
    assert_eq!(m["document"], golden);

    let child = m["id"].as_str().unwrap();
    let (_, h) = call(&app, "GET", &format!("/qps/{child}/history"), None).await;
    let steps: Vec<&str> = h["chain"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["step"].as_str().unwrap())
        .collect();
    assert_eq!(steps, ["upload", "mutate 1,3,5"]);
    assert_eq!(h["provenance"], json!(["mutate 1,3,5"]));
}

#[tokio::test]
async fn upload_document_and_analyse() {
    let app = router(Settings::default());
    let doc: Value = serde_json::from_str(qpmut::fixtures::GRID3_JSON).unwrap();
    let (s, v) = call(&app, "POST", "/qps", Some(doc)).await;
    assert_eq!(s, StatusCode::CREATED);
    let id = v["id"].as_str().unwrap();
    let (s, a) = call(&app, "GET", &format!("/qps/{id}/analysis"), None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(a["dim"], 58);
    assert_eq!(a["selfinjective"], true);
    assert_eq!(a["nakayama"], "(1 9)(2 8)(3 7)(4 6)(5)");
    assert_eq!(a["orbits"].as_array().unwrap().len(), 5);
}

#[tokio::test]
async fn verify_two_step_chain() {
    let app = router(Settings::default());
    let (_, v) = call(&app, "POST", "/qps", Some(json!({ "fixture": "GRID3" }))).await;
    let id = v["id"].as_str().unwrap().to_string();
    let (s, r) = call(
        &app,
        "POST",
        &format!("/qps/{id}/verify"),
        Some(json!({ "vertices": ["1", "9"] })),
    )
    .await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(r["passed"], true);
    assert_eq!(r["iso"], true);
    let (_, m) = call(
        &app,
        "POST",
        &format!("/qps/{id}/mutate"),
        Some(json!({ "vertices": ["1", "9"] })),
    )
    .await;
    let next = m["id"].as_str().unwrap();
    let (_, r) = call(
        &app,
        "POST",
        &format!("/qps/{next}/verify"),
        Some(json!({ "vertices": ["3", "7"] })),
    )
    .await;
    assert_eq!(r["passed"], true);
    assert_eq!(r["tilting"]["direct"], true);
}

#[tokio::test]
async fn errors_are_structured() {
    let app = router(Settings::default());
    let (s, e) = call(&app, "GET", "/qps/42", None).await;
    assert_eq!(s, StatusCode::NOT_FOUND);
    assert_eq!(e["code"], "not_found");
    assert!(e["message"].is_string() && !e["details"].is_null());

    let (_, v) = call(&app, "POST", "/qps", Some(json!({ "fixture": "HEX" }))).await;
    let id = v["id"].as_str().unwrap().to_string();
    let (s, e) = call(
        &app,
        "POST",
        &format!("/qps/{id}/mutate"),
        Some(json!({ "vertices": ["1", "2"] })),
    )
    .await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(e["code"], "not_mutable");
    assert_eq!(e["details"]["violations"].as_array().unwrap().len(), 1);

    let (s, e) = call(&app, "POST", "/qps", Some(json!({ "fixture": "nope" }))).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
    assert_eq!(e["code"], "bad_input");

    let bad = json!({ "field": "Q", "vertices": ["1"], "arrows": [{ "id": "a", "from": "1", "to": "2" }], "potential": [] });
    let (s, e) = call(&app, "POST", "/qps", Some(bad)).await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(e["code"], "unknown_vertex");
}

#[tokio::test]
async fn concurrent_sessions_are_independent() {
    let app = router(Settings::default());
    let uploads = (0..4).map(|_| {
        let app = app.clone();
        tokio::spawn(async move {
            call(&app, "POST", "/qps", Some(json!({ "fixture": "TUB(2)" }))).await
        })
    });
    let mut ids = Vec::new();
    for u in uploads {
        let (s, v) = u.await.unwrap();
        assert_eq!(s, StatusCode::CREATED);
        ids.push(v["id"].as_str().unwrap().to_string());
    }
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), 4);
}
