//! Web layer: routing, parameter parsing and response encoding. Everything
//! else is delegated to [`App`].

use std::collections::HashMap;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, HeaderMap, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde_json::json;

use crate::app::{ApiError, App, CheckRequest};
use crate::profile::{render, Profile};

type Params = Query<HashMap<String, String>>;

pub fn router(app: App) -> Router {
    Router::new()
        .route("/cards", post(create_card).get(list_cards))
        .route("/cards/{id}", get(get_card).delete(delete_card))
        .route("/cards/{id}/related", get(related))
        .route("/graph", get(graph))
        .route("/check", post(check))
        .route("/ontology", get(ontology))
        .fallback(|| async { ApiError::new(404, "NOT_FOUND", "no such endpoint") })
        .with_state(app)
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        (status, Json(self)).into_response()
    }
}

fn flag(params: &HashMap<String, String>, name: &str) -> Result<bool, ApiError> {
    match params.get(name).map(String::as_str) {
        None | Some("false") => Ok(false),
        Some("true") => Ok(true),
        Some(other) => Err(ApiError::bad_request(
            "BAD_PARAMETER",
            format!("{name} must be true or false, not '{other}'"),
        )),
    }
}

fn utf8(body: Bytes) -> Result<String, ApiError> {
    String::from_utf8(body.to_vec()).map_err(|e| ApiError::bad_request("BAD_REQUEST", format!("body is not UTF-8: {e}")))
}

async fn create_card(State(app): State<App>, Query(params): Params, body: Bytes) -> Result<Response, ApiError> {
    let overwrite = flag(&params, "overwrite")?;
    let id = app.create_card(utf8(body)?, overwrite).await?;
    let location = format!("/cards/{id}");
    Ok((StatusCode::CREATED, [(header::LOCATION, location)], Json(json!({ "id": id }))).into_response())
}

async fn list_cards(State(app): State<App>, Query(mut params): Params) -> Result<Response, ApiError> {
    Ok(Json(app.list_cards(params.remove("kind")).await?).into_response())
}

async fn get_card(
    State(app): State<App>,
    Path(id): Path<String>,
    Query(params): Params,
    headers: HeaderMap,
) -> Result<Response, ApiError> {
    let accept = headers.get(header::ACCEPT).and_then(|v| v.to_str().ok());
    let profile = Profile::negotiate(params.get("profile").map(String::as_str), accept)?;
    let card = app.card(id).await?;
    let body = render(&card, profile)?;
    Ok((
        [(header::CONTENT_TYPE, profile.content_type()), (header::VARY, "Accept")],
        body,
    )
        .into_response())
}

async fn delete_card(State(app): State<App>, Path(id): Path<String>) -> Result<StatusCode, ApiError> {
    app.delete_card(id).await?;
    Ok(StatusCode::NO_CONTENT)
}

async fn related(State(app): State<App>, Path(id): Path<String>, Query(params): Params) -> Result<Response, ApiError> {
    let relation = params
        .get("relation")
        .cloned()
        .unwrap_or_else(|| "semantique_metier".into());
    let infer = flag(&params, "infer")?;
    Ok(Json(app.related(id, relation, infer).await?).into_response())
}

async fn graph(State(app): State<App>, Query(params): Params) -> Result<Response, ApiError> {
    let root = params
        .get("root")
        .cloned()
        .ok_or_else(|| ApiError::bad_request("BAD_PARAMETER", "root is required"))?;
    let depth = match params.get("depth") {
        None => 2,
        Some(d) => d
            .parse::<usize>()
            .map_err(|_| ApiError::bad_request("BAD_DEPTH", format!("depth must be a non-negative integer, not '{d}'")))?,
    };
    let infer = flag(&params, "infer")?;
    Ok(Json(app.graph(root, depth, infer).await?).into_response())
}

async fn check(State(app): State<App>, body: Bytes) -> Result<Response, ApiError> {
    let request: CheckRequest =
        serde_json::from_slice(&body).map_err(|e| ApiError::bad_request("BAD_REQUEST", e.to_string()))?;
    Ok(Json(app.check(request)?).into_response())
}

async fn ontology(State(app): State<App>) -> Result<Response, ApiError> {
    Ok(Json(app.ontology().await?).into_response())
}
