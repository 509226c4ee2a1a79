//! In-memory JSON service over the same operations as the command line.

use std::sync::{Arc, RwLock};

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands;
use crate::config::Settings;
use crate::failure::{ErrorBody, Exit, Failure};
use crate::input;
use qpmut::document::QPDocument;
use qpmut::qpcore::QP;

/// One QP in the exploration tree. Nodes are never modified.
#[derive(Debug)]
struct Node {
    qp: Arc<QP>,
    name: Option<String>,
    parent: Option<usize>,
    step: String,
}

#[derive(Debug)]
pub struct AppState {
    settings: Settings,
    nodes: RwLock<Vec<Node>>,
}

type Shared = Arc<AppState>;

#[derive(Debug)]
pub struct ApiError(StatusCode, ErrorBody);

impl From<Failure> for ApiError {
    fn from(f: Failure) -> ApiError {
        let status = match (f.exit, f.body.code.as_str()) {
            (_, "bad_input") => StatusCode::BAD_REQUEST,
            (Exit::Internal, _) => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        ApiError(status, f.body)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(self.1)).into_response()
    }
}

fn not_found(id: &str) -> ApiError {
    ApiError(
        StatusCode::NOT_FOUND,
        ErrorBody {
            code: "not_found".into(),
            message: format!("no QP with id {id}"),
            details: json!({ "id": id }),
        },
    )
}

type ApiResult<T> = Result<Json<T>, ApiError>;

/// Upload body: a full document or the name of a fixture.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Upload {
    Fixture { fixture: String },
    Document(Box<QPDocument>),
}

#[derive(Debug, Deserialize)]
pub struct VertexBody {
    pub vertices: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Created {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
    pub truncated: bool,
    pub document: QPDocument,
}

#[derive(Debug, Serialize)]
pub struct HistoryEntry {
    pub id: String,
    pub step: String,
}

impl AppState {
    pub fn new(settings: Settings) -> AppState {
        AppState {
            settings,
            nodes: RwLock::new(Vec::new()),
        }
    }

    fn get(&self, id: &str) -> Result<(Arc<QP>, Option<String>), ApiError> {
        let k = parse_id(id)?;
        let nodes = self.nodes.read().expect("lock");
        nodes
            .get(k)
            .map(|n| (n.qp.clone(), n.name.clone()))
            .ok_or_else(|| not_found(id))
    }

    fn push(&self, node: Node) -> usize {
        let mut nodes = self.nodes.write().expect("lock");
        nodes.push(node);
        nodes.len() - 1
    }
}

fn parse_id(id: &str) -> Result<usize, ApiError> {
    id.parse::<usize>()
        .ok()
        .filter(|&k| k > 0)
        .map(|k| k - 1)
        .ok_or_else(|| not_found(id))
}

fn show_id(k: usize) -> String {
    (k + 1).to_string()
}

pub fn router(settings: Settings) -> Router {
    let state: Shared = Arc::new(AppState::new(settings));
    Router::new()
        .route("/qps", post(upload))
        .route("/qps/{id}", get(fetch))
        .route("/qps/{id}/mutate", post(mutate))
        .route("/qps/{id}/analysis", get(analysis))
        .route("/qps/{id}/verify", post(verify))
        .route("/qps/{id}/history", get(history))
        .with_state(state)
}

async fn upload(
    State(st): State<Shared>,
    Json(body): Json<Upload>,
) -> Result<(StatusCode, Json<Created>), ApiError> {
    let loaded = match body {
        Upload::Fixture { fixture } => {
            let qp = qpmut::fixtures::by_name(&fixture)
                .ok_or_else(|| Failure::input(format!("unknown fixture `{fixture}`")))?;
            input::from_document(QPDocument::from_qp(&qp, Some(fixture)), st.settings.field)?
        }
        Upload::Document(doc) => input::from_document(*doc, st.settings.field)?,
    };
    let document = commands::document(&loaded.qp, loaded.name.clone());
    let truncated = loaded.qp.is_truncated();
    let k = st.push(Node {
        qp: Arc::new(loaded.qp),
        name: loaded.name,
        parent: None,
        step: "upload".into(),
    });
    Ok((
        StatusCode::CREATED,
        Json(Created {
            id: show_id(k),
            parent: None,
            truncated,
            document,
        }),
    ))
}

async fn fetch(State(st): State<Shared>, Path(id): Path<String>) -> ApiResult<QPDocument> {
    let (qp, name) = st.get(&id)?;
    Ok(Json(commands::document(&qp, name)))
}

async fn mutate(
    State(st): State<Shared>,
    Path(id): Path<String>,
    Json(body): Json<VertexBody>,
) -> Result<(StatusCode, Json<Created>), ApiError> {
    let (qp, name) = st.get(&id)?;
    let settings = st.settings;
    let vertices = body.vertices.clone();
    let (mu, exit) =
        tokio::task::spawn_blocking(move || commands::mutate(&qp, &vertices, &settings))
            .await
            .map_err(|e| Failure::new(Exit::Internal, "internal", e.to_string(), Value::Null))??;
    let document = commands::document(&mu, name.clone());
    let step = format!("mutate {}", body.vertices.join(","));
    let parent = parse_id(&id)?;
    let k = st.push(Node {
        qp: Arc::new(mu),
        name,
        parent: Some(parent),
        step,
    });
    let created = Created {
        id: show_id(k),
        parent: Some(id),
        truncated: exit == Exit::Inconclusive,
        document,
    };
    Ok((StatusCode::CREATED, Json(created)))
}

async fn analysis(State(st): State<Shared>, Path(id): Path<String>) -> ApiResult<Value> {
    let (qp, _) = st.get(&id)?;
    let settings = st.settings;
    let v = tokio::task::spawn_blocking(move || commands::analysis(&qp, &settings))
        .await
        .map_err(|e| Failure::new(Exit::Internal, "internal", e.to_string(), Value::Null))?;
    Ok(Json(v))
}

async fn verify(
    State(st): State<Shared>,
    Path(id): Path<String>,
    Json(body): Json<VertexBody>,
) -> ApiResult<commands::VerifyOutput> {
    let (qp, _) = st.get(&id)?;
    let settings = st.settings;
    let (out, _) = tokio::task::spawn_blocking(move || {
        commands::verify(
            &qp,
            &body.vertices,
            &settings,
            &commands::VerifyFlags::default(),
        )
    })
    .await
    .map_err(|e| Failure::new(Exit::Internal, "internal", e.to_string(), Value::Null))??;
    Ok(Json(out))
}

async fn history(State(st): State<Shared>, Path(id): Path<String>) -> ApiResult<Value> {
    let mut k = Some(parse_id(&id)?);
    let nodes = st.nodes.read().expect("lock");
    if k.is_some_and(|k| k >= nodes.len()) {
        return Err(not_found(&id));
    }
    let mut chain = Vec::new();
    while let Some(i) = k {
        chain.push(HistoryEntry {
            id: show_id(i),
            step: nodes[i].step.clone(),
        });
        k = nodes[i].parent;
    }
    chain.reverse();
    let provenance = nodes[parse_id(&id)?].qp.provenance().to_vec();
    Ok(Json(
        json!({ "id": id, "chain": chain, "provenance": provenance }),
    ))
}

/// Binds and serves until the process is stopped.
pub async fn serve(settings: Settings, host: &str, port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind((host, port)).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(settings)).await
}
