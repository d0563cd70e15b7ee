use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use esgame_cli::api::router;
use esgame_cli::store::Store;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

fn app(dir: &std::path::Path) -> Router {
    router(Arc::new(Store::open(dir).unwrap()))
}

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let mut req = Request::builder().method(method).uri(uri);
    let body = match body {
        Some(v) => {
            req = req.header("content-type", "application/json");
            Body::from(v.to_string())
        }
        None => Body::empty(),
    };
    let resp = app.clone().oneshot(req.body(body).unwrap()).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = serde_json::from_slice(&bytes).unwrap_or(Value::String(String::from_utf8_lossy(&bytes).into_owned()));
    (status, value)
}

async fn new_game(app: &Router, variant: &str, mode: &str) -> String {
    let (status, body) = call(app, "POST", "/games", Some(json!({"variant": variant, "mode": mode}))).await;
    assert_eq!(status, StatusCode::CREATED);
    body["id"].as_str().unwrap().to_string()
}

#[tokio::test]
async fn human_game_reaches_step_nine() {
    let dir = tempfile::tempdir().unwrap();
    let app = app(dir.path());
    let id = new_game(&app, "empty", "human").await;
    let uri = format!("/games/{id}/moves");
    let mut accepted = 0;
    // Take a safe cell each time (from the overlay complement) so the game
    // runs to the engine's final trap.
    while accepted < 5 {
        let (_, state) = call(&app, "GET", &format!("/games/{id}"), None).await;
        if state["status"] != "ongoing" {
            break;
        }
        let p = safe_point(&state);
        let (status, out) = call(&app, "POST", &uri, Some(json!({"x": p.0, "y": p.1}))).await;
        assert_eq!(status, StatusCode::OK, "{out}");
        accepted += 1;
    }
    assert_eq!(accepted, 5);
    let (status, state) = call(&app, "GET", &format!("/games/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(state["step"], 9);
    assert_eq!(state["status"]["loser"], 1);
    assert_eq!(state["status"]["witness"].as_array().unwrap().len(), 5);
    let (status, body) = call(&app, "POST", &uri, Some(json!({"x": "100", "y": "7"}))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(body["error"], "game_finished");
}

/// A point player 1 can place without losing, or the first candidate if
/// none is safe.
fn safe_point(state: &Value) -> (String, String) {
    use esgame_core::strategy::losing_cells;
    use esgame_core::{GameVariant, Point};
    let moves: Vec<Point> = serde_json::from_value(state["moves"].clone()).unwrap();
    let variant: GameVariant = serde_json::from_value(state["variant"].clone()).unwrap();
    if moves.is_empty() {
        return ("0".into(), "0".into());
    }
    let cells = esgame_core::geometry::arrangement_cells(&moves).unwrap();
    let losing: Vec<_> = losing_cells(&moves, variant).unwrap().into_iter().map(|c| c.signs).collect();
    let pick = cells.iter().find(|c| !losing.contains(&c.signs)).unwrap_or(&cells[0]);
    let r = &pick.representative;
    (esgame_core::rational::format(&r.x), esgame_core::rational::format(&r.y))
}

#[tokio::test]
async fn validation_errors() {
    let dir = tempfile::tempdir().unwrap();
    let app = app(dir.path());
    let id = new_game(&app, "convex", "human").await;
    let uri = format!("/games/{id}/moves");
    let (status, out) = call(&app, "POST", &uri, Some(json!({"x": "0", "y": "0"}))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(out["engine_reply"], json!({"x": "1", "y": "0"}));
    let (status, body) = call(&app, "POST", &uri, Some(json!({"x": "2", "y": "0"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["error"], "general_position");
    let (status, body) = call(&app, "POST", &uri, Some(json!({"x": "abc", "y": "0"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["error"], "malformed_number");
    let (status, _) = call(&app, "POST", "/games", Some(json!({"variant": "hexagon", "mode": "human"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, body) = call(&app, "GET", "/games/nope", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(body["error"], "not_found");
}

#[tokio::test]
async fn coordinates_are_exact() {
    let dir = tempfile::tempdir().unwrap();
    let app = app(dir.path());
    let id = new_game(&app, "convex", "human").await;
    let (status, _) = call(&app, "POST", &format!("/games/{id}/moves"), Some(json!({"x": "0.1", "y": "-9/4"}))).await;
    assert_eq!(status, StatusCode::OK);
    let (_, state) = call(&app, "GET", &format!("/games/{id}"), None).await;
    assert_eq!(state["moves"][0], json!({"x": "1/10", "y": "-9/4"}));
    assert_eq!(state["moves"][1], json!({"x": "11/10", "y": "-9/4"}));
}

#[tokio::test]
async fn random_games_overlay_and_delete() {
    let dir = tempfile::tempdir().unwrap();
    let app = app(dir.path());
    let (status, body) = call(&app, "POST", "/games", Some(json!({"variant": "convex", "mode": "random", "seed": 4}))).await;
    assert_eq!(status, StatusCode::CREATED);
    let id = body["id"].as_str().unwrap().to_string();
    let uri = format!("/games/{id}/moves");
    for _ in 0..2 {
        let (status, _) = call(&app, "POST", &uri, None).await;
        assert_eq!(status, StatusCode::OK);
    }
    let (_, overlay) = call(&app, "GET", &format!("/games/{id}/overlay"), None).await;
    assert_eq!(overlay["step"], 4);
    assert_eq!(overlay["label"], "4");
    assert!(!overlay["losing"].as_array().unwrap().is_empty());
    let (status, svg) = call(&app, "GET", &format!("/games/{id}/svg?overlay=true"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert!(svg.as_str().unwrap().starts_with("<svg"));

    // Sessions survive a restart.
    let reopened = self::app(dir.path());
    let (status, state) = call(&reopened, "GET", &format!("/games/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(state["step"], 4);

    let (status, _) = call(&reopened, "DELETE", &format!("/games/{id}"), None).await;
    assert_eq!(status, StatusCode::NO_CONTENT);
    let (status, _) = call(&reopened, "GET", &format!("/games/{id}"), None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert!(!dir.path().join("games").join(format!("{id}.json")).exists());
}

#[tokio::test]
async fn background_verification_job() {
    let dir = tempfile::tempdir().unwrap();
    let app = app(dir.path());
    let (status, job) = call(&app, "POST", "/jobs", Some(json!({"lemma": "layered", "samples": 20, "seed": 1}))).await;
    assert_eq!(status, StatusCode::ACCEPTED);
    let id = job["id"].as_str().unwrap().to_string();
    for _ in 0..600 {
        let (_, job) = call(&app, "GET", &format!("/jobs/{id}"), None).await;
        if job["status"] == "done" {
            assert!(job["reports"].as_array().unwrap().iter().all(|r| r["verdict"] == "verified"));
            return;
        }
        assert_eq!(job["status"], "running");
        tokio::time::sleep(std::time::Duration::from_millis(100)).await;
    }
    panic!("job did not finish");
}
