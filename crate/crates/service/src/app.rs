//! Application layer: the only part of the service that talks to the store.
//! Store calls block, so each one runs on the blocking thread pool.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use knowcard_core::cardxml::{parse_card, CardXmlError};
use knowcard_core::model::{CardKind, KnowledgeCard};
use knowcard_core::ocl::{check_invariant, parse_constraint, AngleUnit, CheckReport, Env, OclError, Tolerance};
use knowcard_core::rdf::{Iri, Label};
use knowcard_core::store::{CardStore, CardSummary, RelatedCard, StoreError};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::ServiceConfig;

/// Relation names accepted by the related-cards query.
pub const RELATIONS: [&str; 5] = ["semantique_metier", "composition", "aggregation", "association", "specialization"];

pub const MAX_DEPTH: usize = 10;

/// Error envelope shared by every endpoint.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApiError {
    #[serde(skip)]
    pub status: u16,
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl ApiError {
    pub fn new(status: u16, code: impl Into<String>, message: impl Into<String>) -> Self {
        ApiError {
            status,
            code: code.into(),
            message: message.into(),
            detail: None,
        }
    }

    pub fn bad_request(code: &str, message: impl Into<String>) -> Self {
        ApiError::new(400, code, message)
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

impl fmt::Display for ApiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.status, self.code, self.message)
    }
}

impl std::error::Error for ApiError {}

impl From<StoreError> for ApiError {
    fn from(e: StoreError) -> Self {
        let status = match &e {
            StoreError::DuplicateId(_) | StoreError::Redefinition(_) => 409,
            StoreError::NotFound(_) => 404,
            StoreError::ValidationFailed(_) | StoreError::Rdf(_) => 400,
            StoreError::StorageIo { .. } => 500,
        };
        let error = ApiError::new(status, e.code(), e.to_string());
        match &e {
            StoreError::ValidationFailed(report) => error.with_detail(json!(report)),
            StoreError::Redefinition(c) => error.with_detail(json!({
                "concept": c.concept,
                "defined_by": c.defined_by,
            })),
            _ => error,
        }
    }
}

impl From<CardXmlError> for ApiError {
    fn from(e: CardXmlError) -> Self {
        ApiError::bad_request("VALIDATION_FAILED", e.to_string()).with_detail(json!(e.report()))
    }
}

impl From<OclError> for ApiError {
    fn from(e: OclError) -> Self {
        let mut detail = serde_json::Map::new();
        if let Some(offset) = e.offset() {
            detail.insert("offset".into(), offset.into());
        }
        if let OclError::UnboundIdent { name, .. } = &e {
            detail.insert("name".into(), name.clone().into());
        }
        ApiError::bad_request(e.code(), e.to_string()).with_detail(Value::Object(detail))
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct CheckRequest {
    pub constraint: String,
    #[serde(default)]
    pub bindings: BTreeMap<String, f64>,
    #[serde(default)]
    pub angle_unit: Option<AngleUnit>,
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphNodeView {
    pub resource: String,
    pub depth: usize,
    pub card_id: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphEdgeView {
    pub from: String,
    pub to: String,
    pub relation: String,
    pub inferred: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphView {
    pub root: String,
    pub nodes: Vec<GraphNodeView>,
    pub edges: Vec<GraphEdgeView>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyEntry {
    pub property: String,
    pub labels: Vec<Label>,
    pub super_properties: Vec<String>,
}

#[derive(Clone)]
pub struct App {
    store: Arc<CardStore>,
}

impl App {
    pub fn new(store: CardStore) -> Self {
        App { store: Arc::new(store) }
    }

    pub fn open(config: &ServiceConfig) -> Result<Self, StoreError> {
        Ok(App::new(CardStore::open(&config.store_root, config.store_options())?))
    }

    async fn blocking<T, F>(&self, f: F) -> Result<T, ApiError>
    where
        T: Send + 'static,
        F: FnOnce(&CardStore) -> Result<T, ApiError> + Send + 'static,
    {
        let store = self.store.clone();
        tokio::task::spawn_blocking(move || f(&store))
            .await
            .map_err(|e| ApiError::new(500, "INTERNAL", e.to_string()))?
    }

    /// Parses, validates and stores a card document; returns the card id.
    pub async fn create_card(&self, document: String, overwrite: bool) -> Result<String, ApiError> {
        let card = parse_card(&document)?;
        self.blocking(move |s| Ok(s.put_card(&card, overwrite)?)).await
    }

    pub async fn card(&self, id: String) -> Result<KnowledgeCard, ApiError> {
        self.blocking(move |s| Ok(s.get_card(&id)?)).await
    }

    pub async fn list_cards(&self, kind: Option<String>) -> Result<Vec<CardSummary>, ApiError> {
        let kind = kind
            .map(|k| k.parse::<CardKind>())
            .transpose()
            .map_err(|e| ApiError::bad_request("BAD_KIND", e.to_string()))?;
        self.blocking(move |s| Ok(s.list_cards(kind)?)).await
    }

    pub async fn delete_card(&self, id: String) -> Result<(), ApiError> {
        self.blocking(move |s| Ok(s.delete_card(&id)?)).await
    }

    pub async fn related(&self, id: String, relation: String, infer: bool) -> Result<Vec<RelatedCard>, ApiError> {
        let relation = relation_iri(&relation)?;
        self.blocking(move |s| Ok(s.related_for_card(&id, &relation, infer)?)).await
    }

    /// Related resources of a single resource rather than a whole card.
    pub async fn related_to_resource(
        &self,
        resource: String,
        relation: String,
        infer: bool,
    ) -> Result<Vec<RelatedCard>, ApiError> {
        let relation = relation_iri(&relation)?;
        self.blocking(move |s| {
            let resource = s.resolve_resource(&resource)?;
            Ok(s.find_related_cards(&resource, &relation, infer)?)
        })
        .await
    }

    pub async fn graph(&self, root: String, depth: usize, infer: bool) -> Result<GraphView, ApiError> {
        if depth > MAX_DEPTH {
            return Err(ApiError::bad_request(
                "BAD_DEPTH",
                format!("depth must be between 0 and {MAX_DEPTH}"),
            ));
        }
        self.blocking(move |s| {
            let root = s.resolve_resource(&root)?;
            let found = s.neighborhood(&root, depth, infer)?;
            let mapping = s.mapping()?;
            let nodes = found
                .nodes
                .into_iter()
                .map(|n| {
                    let card_id = Iri::new(n.resource.clone())
                        .ok()
                        .and_then(|iri| s.concept_of(&iri).and_then(|c| mapping.defining(c)).map(|d| d.card_id.clone()));
                    GraphNodeView {
                        resource: n.resource,
                        depth: n.depth,
                        card_id,
                    }
                })
                .collect();
            let edges = found
                .edges
                .into_iter()
                .map(|e| GraphEdgeView {
                    from: e.from,
                    to: e.to,
                    relation: e.relation,
                    inferred: e.inferred,
                })
                .collect();
            Ok(GraphView {
                root: root.to_string(),
                nodes,
                edges,
            })
        })
        .await
    }

    pub fn check(&self, request: CheckRequest) -> Result<CheckReport, ApiError> {
        check(request)
    }

    pub async fn ontology(&self) -> Result<Vec<PropertyEntry>, ApiError> {
        self.blocking(|s| {
            Ok(s.schema()?
                .iter()
                .map(|(iri, def)| PropertyEntry {
                    property: iri.to_string(),
                    labels: def.labels.clone(),
                    super_properties: def.super_properties.iter().map(|p| p.to_string()).collect(),
                })
                .collect())
        })
        .await
    }
}

pub fn relation_iri(name: &str) -> Result<Iri, ApiError> {
    if RELATIONS.contains(&name) {
        Ok(Iri::lb(name))
    } else {
        Err(ApiError::bad_request(
            "UNKNOWN_RELATION",
            format!("unknown relation '{name}', expected one of: {}", RELATIONS.join(", ")),
        ))
    }
}

pub fn check(request: CheckRequest) -> Result<CheckReport, ApiError> {
    let constraint = parse_constraint(&request.constraint)?;
    let env = Env::from_pairs(request.angle_unit.unwrap_or_default(), request.bindings)?;
    let default = Tolerance::default();
    let tol = Tolerance::new(
        request.rel_tol.unwrap_or(default.rel),
        request.abs_tol.unwrap_or(default.abs),
    )?;
    Ok(check_invariant(&constraint, &env, tol)?)
}
