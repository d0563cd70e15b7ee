//! HTTP/JSON service.
//!
//! ```text
//! POST   /games                {variant, mode, seed?}  -> 201 {id, ...state}
//! GET    /games                                        -> [id]
//! GET    /games/{id}                                   -> state
//! POST   /games/{id}/moves     {x, y} | {}             -> MoveOutcome
//! GET    /games/{id}/overlay                           -> OverlayBundle
//! GET    /games/{id}/svg?overlay=true                  -> image/svg+xml
//! DELETE /games/{id}                                   -> 204
//! POST   /jobs                 {lemma, samples?, seed?} -> 202 {id}
//! GET    /jobs/{id}                                    -> job status and reports
//! ```

use std::sync::Arc;

use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use esgame_core::geometry::convex_layers;
use esgame_core::referee::{GameMode, MoveOutcome, StatusJson};
use esgame_core::simulate::random_adversary_move;
use esgame_core::svg::render_svg;
use esgame_core::verify::{verify_suite, Suite};
use esgame_core::{rational, Error, GameVariant, Player, Point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::store::{now_secs, Job, JobStatus, Session, Store};

pub type AppState = Arc<Store>;

pub fn router(store: AppState) -> Router {
    Router::new()
        .route("/health", get(|| async { "ok" }))
        .route("/games", post(create_game).get(list_games))
        .route("/games/{id}", get(get_game).delete(delete_game))
        .route("/games/{id}/moves", post(post_move))
        .route("/games/{id}/overlay", get(get_overlay))
        .route("/games/{id}/svg", get(get_svg))
        .route("/jobs", post(create_job))
        .route("/jobs/{id}", get(get_job))
        .with_state(store)
}

/// Error body: `{"error": code, "message": text}`.
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        ApiError { status, code, message: message.into() }
    }

    fn not_found(id: &str) -> Self {
        ApiError::new(StatusCode::NOT_FOUND, "not_found", format!("no game {id}"))
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::GameAlreadyFinished => StatusCode::CONFLICT,
            Error::NoWinningMove(_) | Error::DepthExceeded(_) | Error::NoFeasiblePoint(_) => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::BAD_REQUEST,
        };
        ApiError::new(status, e.code(), e.to_string())
    }
}

impl From<std::io::Error> for ApiError {
    fn from(e: std::io::Error) -> Self {
        ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "storage", e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(serde_json::json!({ "error": self.code, "message": self.message }))).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

#[derive(Deserialize)]
struct NewGame {
    variant: GameVariant,
    mode: GameMode,
    #[serde(default)]
    seed: Option<u64>,
}

/// Full state of a session as served to clients.
#[derive(Serialize)]
pub struct GameView {
    pub id: String,
    pub mode: GameMode,
    pub created_at: u64,
    pub variant: GameVariant,
    pub moves: Vec<Point>,
    pub status: StatusJson,
    pub step: usize,
    pub to_move: Player,
    pub label: Option<esgame_core::pattern::ConfigurationLabel>,
    pub layers: Vec<Vec<Point>>,
}

fn view(s: &Session) -> ApiResult<GameView> {
    Ok(GameView {
        id: s.id.clone(),
        mode: s.mode,
        created_at: s.created_at,
        variant: s.state.variant,
        moves: s.state.moves().to_vec(),
        status: StatusJson::from(s.state.status()),
        step: s.state.step(),
        to_move: s.state.to_move(),
        label: s.state.label(),
        layers: convex_layers(s.state.moves())?,
    })
}

/// Runs `f` on the locked session off the async executor.
async fn with_session<T: Send + 'static>(
    store: &AppState,
    id: &str,
    f: impl FnOnce(&Store, &mut Session) -> ApiResult<T> + Send + 'static,
) -> ApiResult<T> {
    let handle = store.get(id).ok_or_else(|| ApiError::not_found(id))?;
    let store = store.clone();
    tokio::task::spawn_blocking(move || {
        let mut session = handle.lock().expect("session lock");
        f(&store, &mut session)
    })
    .await
    .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string()))?
}

async fn create_game(State(store): State<AppState>, body: Result<Json<NewGame>, axum::extract::rejection::JsonRejection>) -> ApiResult<(StatusCode, Json<GameView>)> {
    let Json(req) = body.map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "malformed_request", e.body_text()))?;
    let seed = req.seed.unwrap_or_else(now_secs);
    let handle = store.create(req.variant, req.mode, seed)?;
    let session = handle.lock().expect("session lock");
    Ok((StatusCode::CREATED, Json(view(&session)?)))
}

async fn list_games(State(store): State<AppState>) -> Json<Vec<String>> {
    Json(store.ids())
}

async fn get_game(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<GameView>> {
    with_session(&store, &id, |_, s| view(s)).await.map(Json)
}

async fn delete_game(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult<StatusCode> {
    if store.delete(&id)? {
        Ok(StatusCode::NO_CONTENT)
    } else {
        Err(ApiError::not_found(&id))
    }
}

/// A coordinate given as a rational or finite-decimal string, or a JSON
/// number (read from its literal text, never through a float).
fn coordinate(v: &Value) -> ApiResult<esgame_core::Rational> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => return Err(Error::MalformedNumber(other.to_string()).into()),
    };
    Ok(rational::parse(&text)?)
}

#[derive(Deserialize, Default)]
struct MoveRequest {
    x: Option<Value>,
    y: Option<Value>,
}

async fn post_move(
    State(store): State<AppState>,
    Path(id): Path<String>,
    body: Option<Json<MoveRequest>>,
) -> ApiResult<Json<MoveOutcome>> {
    let req = body.map(|Json(b)| b).unwrap_or_default();
    let point = match (&req.x, &req.y) {
        (Some(x), Some(y)) => Some(Point::new(coordinate(x)?, coordinate(y)?)),
        (None, None) => None,
        _ => return Err(Error::MalformedNumber("a move needs both x and y".into()).into()),
    };
    with_session(&store, &id, move |store, s| {
        if s.state.status().is_finished() {
            return Err(Error::GameAlreadyFinished.into());
        }
        let outcome = match (s.mode, point) {
            (GameMode::HumanVsEngine, Some(p)) => s.state.apply_with_reply(p)?,
            (GameMode::HumanVsEngine, None) => {
                return Err(Error::InvalidArgument("human games need x and y".into()).into());
            }
            (GameMode::EngineVsRandom, Some(_)) => {
                return Err(Error::InvalidArgument("random games take an empty move request".into()).into());
            }
            (GameMode::EngineVsRandom, None) => {
                let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
                rng.set_stream(s.state.step() as u64);
                let p = random_adversary_move(s.state.moves(), s.state.variant, &mut rng)?;
                s.state.apply_with_reply(p)?
            }
        };
        store.save(s)?;
        Ok(outcome)
    })
    .await
    .map(Json)
}

async fn get_overlay(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult<Response> {
    let overlay = with_session(&store, &id, |_, s| Ok(s.overlay()?)).await?;
    Ok(Json(overlay).into_response())
}

#[derive(Deserialize)]
struct SvgQuery {
    #[serde(default)]
    overlay: bool,
}

async fn get_svg(State(store): State<AppState>, Path(id): Path<String>, Query(q): Query<SvgQuery>) -> ApiResult<Response> {
    let svg = with_session(&store, &id, move |_, s| {
        let overlay = if q.overlay { Some(s.overlay()?) } else { None };
        Ok(render_svg(&s.state, overlay.as_ref())?)
    })
    .await?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], svg).into_response())
}

#[derive(Deserialize)]
struct NewJob {
    lemma: String,
    #[serde(default = "default_samples")]
    samples: usize,
    #[serde(default)]
    seed: u64,
}

fn default_samples() -> usize {
    1000
}

async fn create_job(State(store): State<AppState>, Json(req): Json<NewJob>) -> ApiResult<(StatusCode, Json<Job>)> {
    let suite: Suite = req.lemma.parse()?;
    let job = Job {
        id: uuid::Uuid::new_v4().simple().to_string(),
        lemma: req.lemma,
        samples: req.samples,
        seed: req.seed,
        created_at: now_secs(),
        status: JobStatus::Running,
    };
    store.put_job(job.clone())?;
    let worker = store.clone();
    let mut done = job.clone();
    tokio::task::spawn_blocking(move || {
        done.status = match verify_suite(suite, done.samples, done.seed) {
            Ok(reports) => JobStatus::Done { reports },
            Err(e) => JobStatus::Failed { error: e.to_string() },
        };
        let _ = worker.put_job(done);
    });
    Ok((StatusCode::ACCEPTED, Json(job)))
}

async fn get_job(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<Job>> {
    store.job(&id).map(Json).ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, "not_found", format!("no job {id}")))
}
