//! JSON-over-HTTP service.
//!
//! | method | path                            | body            |
//! |--------|---------------------------------|-----------------|
//! | GET    | `/health`                       | `{"status":"ok"}` |
//! | GET    | `/fixtures`                     | fixture names   |
//! | GET    | `/fixtures/environments/{name}` | `EnvironmentFile` |
//! | GET    | `/fixtures/robots/{name}`       | `RobotFile`     |
//! | POST   | `/plan`                         | `PlanRequest` → `PlanResponse` |
//!
//! Errors come back as `{"error": "..."}` with a 4xx status for bad requests
//! and 500 when planning itself fails.

use std::net::SocketAddr;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde_json::json;
use sss_core::io::service::{handle_plan, list_fixtures, ServiceError};
use sss_core::io::{self, PlanRequest, Source};
use tower_http::cors::CorsLayer;

#[derive(Clone, Copy, Debug)]
pub struct ServerConfig {
    /// Most leaves attached to one response.
    pub leaf_cap: usize,
    pub parallel: bool,
}

pub struct ApiError(StatusCode, String);

impl From<ServiceError> for ApiError {
    fn from(e: ServiceError) -> Self {
        let code = match e {
            ServiceError::BadRequest(_) => StatusCode::UNPROCESSABLE_ENTITY,
            ServiceError::NotFound { .. } => StatusCode::NOT_FOUND,
            ServiceError::Internal(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError(code, e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "error": self.1 }))).into_response()
    }
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok" }))
}

async fn fixtures() -> impl IntoResponse {
    Json(list_fixtures())
}

async fn environment(Path(name): Path<String>) -> Result<Response, ApiError> {
    let f = sss_core::io::service::resolve_environment(&Source::Named(name))?;
    let f = f.normalized().map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
    Ok(Json(f).into_response())
}

async fn robot(Path(name): Path<String>) -> Result<Response, ApiError> {
    let f = sss_core::io::service::resolve_robot(&Source::Named(name))?;
    let f = f.normalized().map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
    Ok(Json(f).into_response())
}

async fn plan(State(cfg): State<ServerConfig>, body: Bytes) -> Result<Response, ApiError> {
    let mut req: PlanRequest = serde_json::from_slice(&body)
        .map_err(|e| ApiError(StatusCode::BAD_REQUEST, format!("malformed plan request: {e}")))?;
    req.leaf_cap = Some(req.leaf_cap.map_or(cfg.leaf_cap, |c| c.min(cfg.leaf_cap)));
    let resp = tokio::task::spawn_blocking(move || handle_plan(&req, cfg.parallel))
        .await
        .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))??;
    Ok(([("content-type", "application/json")], io::to_json(&resp)).into_response())
}

pub fn router(cfg: ServerConfig) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/fixtures", get(fixtures))
        .route("/fixtures/environments/{name}", get(environment))
        .route("/fixtures/robots/{name}", get(robot))
        .route("/plan", post(plan))
        .layer(CorsLayer::permissive())
        .with_state(cfg)
}

/// Serve on `127.0.0.1:port` until interrupted.
pub async fn serve(port: u16, cfg: ServerConfig) -> std::io::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("sss: listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(cfg))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
