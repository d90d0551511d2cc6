//! JSON-over-HTTP service.
//!
//! `POST /analyze` takes `{"text", "keywords"?, "topN"?, "profile"?}` and
//! answers with the same report JSON the CLI prints. `GET /health` reports
//! the loaded bank size. Every response body is JSON.

use std::net::SocketAddr;
use std::sync::Arc;

use alt_core::{Lexicon, Profile, ReadabilityReport, ReportOptions, TextError};
use axum::body::Bytes;
use axum::extract::rejection::BytesRejection;
use axum::extract::{DefaultBodyLimit, State};
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::Deserialize;
use serde_json::json;
use tower_http::cors::{AllowOrigin, CorsLayer};

use crate::input::decode;
use crate::json::report_to_string;

/// Largest accepted request body.
pub const MAX_BODY_BYTES: usize = 2 * 1024 * 1024;

#[derive(Clone)]
struct AppState {
    lexicon: Arc<Lexicon>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct AnalyzeRequest {
    text: String,
    #[serde(default)]
    keywords: Vec<String>,
    top_n: Option<usize>,
    profile: Option<String>,
}

fn json_response(status: StatusCode, body: String) -> Response {
    (
        status,
        [(header::CONTENT_TYPE, "application/json; charset=utf-8")],
        body,
    )
        .into_response()
}

fn error(status: StatusCode, message: impl Into<String>) -> Response {
    let body = json!({ "error": message.into(), "status": status.as_u16() });
    json_response(status, body.to_string())
}

fn parse_request(body: &[u8]) -> Result<(String, ReportOptions), String> {
    let text = decode(body).map_err(|e| e.to_string())?;
    let req: AnalyzeRequest =
        serde_json::from_str(&text).map_err(|e| format!("malformed request: {e}"))?;
    let profile = match req.profile.as_deref() {
        None => Profile::AdaptedPt,
        Some(p) => Profile::from_id(p).map_err(|_| format!("unknown profile {p:?}"))?,
    };
    let top_n = req.top_n.unwrap_or(ReportOptions::DEFAULT_TOP_N);
    if top_n == 0 {
        return Err("topN must be at least 1".into());
    }
    let keywords = req
        .keywords
        .into_iter()
        .filter(|k| !k.trim().is_empty())
        .collect();
    Ok((
        req.text,
        ReportOptions {
            keywords,
            top_n,
            profile,
        },
    ))
}

async fn analyze(State(state): State<AppState>, body: Result<Bytes, BytesRejection>) -> Response {
    let body = match body {
        Ok(b) => b,
        Err(rej) if rej.status() == StatusCode::PAYLOAD_TOO_LARGE => {
            return error(
                StatusCode::PAYLOAD_TOO_LARGE,
                format!("request body exceeds {MAX_BODY_BYTES} bytes"),
            )
        }
        Err(rej) => return error(rej.status(), rej.body_text()),
    };
    let (text, options) = match parse_request(&body) {
        Ok(parsed) => parsed,
        Err(msg) => return error(StatusCode::BAD_REQUEST, msg),
    };
    let lexicon = state.lexicon.clone();
    let result =
        tokio::task::spawn_blocking(move || ReadabilityReport::build(&text, &lexicon, &options))
            .await;
    match result {
        Ok(Ok(report)) => json_response(StatusCode::OK, report_to_string(&report)),
        Ok(Err(TextError::EmptyText)) => error(
            StatusCode::UNPROCESSABLE_ENTITY,
            TextError::EmptyText.to_string(),
        ),
        Err(_) => error(StatusCode::INTERNAL_SERVER_ERROR, "analysis failed"),
    }
}

async fn health(State(state): State<AppState>) -> Response {
    let body = json!({ "status": "ok", "bankSize": state.lexicon.bank_size() });
    json_response(StatusCode::OK, body.to_string())
}

async fn not_found() -> Response {
    error(StatusCode::NOT_FOUND, "no such endpoint")
}

async fn method_not_allowed() -> Response {
    error(StatusCode::METHOD_NOT_ALLOWED, "method not allowed")
}

/// CORS policy: any origin, or exactly one.
pub fn cors_layer(origin: Option<&str>) -> Result<CorsLayer, String> {
    let allow = match origin {
        None | Some("*") => AllowOrigin::any(),
        Some(o) => AllowOrigin::exact(
            HeaderValue::from_str(o).map_err(|_| format!("invalid CORS origin {o:?}"))?,
        ),
    };
    Ok(CorsLayer::new()
        .allow_origin(allow)
        .allow_methods([Method::GET, Method::POST, Method::OPTIONS])
        .allow_headers([header::CONTENT_TYPE]))
}

/// The service's routes.
pub fn router(lexicon: Arc<Lexicon>, cors: CorsLayer) -> Router {
    Router::new()
        .route("/analyze", post(analyze))
        .route("/health", get(health))
        .fallback(not_found)
        .method_not_allowed_fallback(method_not_allowed)
        .layer(DefaultBodyLimit::max(MAX_BODY_BYTES))
        .layer(cors)
        .with_state(AppState { lexicon })
}

/// Binds `addr` and serves until Ctrl-C.
pub async fn serve(addr: SocketAddr, app: Router) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("alt: listening on http://{}", listener.local_addr()?);
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
