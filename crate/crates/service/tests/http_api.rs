use axum::body::Body;
use axum::http::{header, Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use knowcard_core::cardxml::serialize_card;
use knowcard_core::model::{
    build_ink_leak_fixture, build_interior_diameter_fixture, build_lead_protection_fixture, KnowledgeCard,
    INTERIOR_DIAMETER_CONSTRAINT,
};
use knowcard_core::store::{CardStore, StoreOptions};
use knowcard_service::{router, App};
use serde_json::{json, Value};
use tower::ServiceExt;

struct Reply {
    status: StatusCode,
    headers: axum::http::HeaderMap,
    body: String,
}

impl Reply {
    fn json(&self) -> Value {
        serde_json::from_str(&self.body).unwrap_or_else(|e| panic!("{e}: {}", self.body))
    }
}

fn service() -> (tempfile::TempDir, Router) {
    let dir = tempfile::tempdir().unwrap();
    let store = CardStore::open(
        dir.path(),
        StoreOptions {
            create: true,
            ..StoreOptions::default()
        },
    )
    .unwrap();
    (dir, router(App::new(store)))
}

async fn call(app: &Router, method: Method, uri: &str, headers: &[(&str, &str)], body: impl Into<Body>) -> Reply {
    let mut request = Request::builder().method(method).uri(uri);
    for (k, v) in headers {
        request = request.header(*k, *v);
    }
    let response = app.clone().oneshot(request.body(body.into()).unwrap()).await.unwrap();
    let status = response.status();
    let headers = response.headers().clone();
    let bytes = response.into_body().collect().await.unwrap().to_bytes();
    Reply {
        status,
        headers,
        body: String::from_utf8(bytes.to_vec()).unwrap(),
    }
}

async fn get(app: &Router, uri: &str) -> Reply {
    call(app, Method::GET, uri, &[], Body::empty()).await
}

async fn post_card(app: &Router, card: &KnowledgeCard) -> Reply {
    call(app, Method::POST, "/cards", &[], serialize_card(card).unwrap()).await
}

fn resources(reply: &Reply) -> Vec<String> {
    reply.json().as_array().unwrap().iter().map(|r| r["resource"].as_str().unwrap().to_string()).collect()
}

#[tokio::test]
async fn post_then_get_round_trips() {
    let (_dir, app) = service();
    let card = build_lead_protection_fixture();
    let created = post_card(&app, &card).await;
    assert_eq!(created.status, StatusCode::CREATED);
    assert_eq!(created.headers[header::LOCATION], "/cards/lead_protection");
    assert_eq!(created.json(), json!({"id": "lead_protection"}));

    let raw = get(&app, "/cards/lead_protection?profile=raw-xml").await;
    assert_eq!(raw.status, StatusCode::OK);
    assert_eq!(raw.body, serialize_card(&card).unwrap());
    assert!(raw.headers[header::CONTENT_TYPE].to_str().unwrap().starts_with("application/xml"));

    let default = get(&app, "/cards/lead_protection").await;
    assert_eq!(default.body, raw.body);
}

#[tokio::test]
async fn json_profile_is_lossless() {
    let (_dir, app) = service();
    for card in [
        build_lead_protection_fixture(),
        build_ink_leak_fixture(),
        build_interior_diameter_fixture(),
    ] {
        assert_eq!(post_card(&app, &card).await.status, StatusCode::CREATED);
        let uri = format!("/cards/{}", card.id);
        let reply = call(&app, Method::GET, &uri, &[("accept", "application/json")], Body::empty()).await;
        assert_eq!(reply.headers[header::CONTENT_TYPE], "application/json");
        let back: KnowledgeCard = serde_json::from_str(&reply.body).unwrap();
        assert_eq!(back, card);
    }
    let reply = call(&app, Method::GET, "/cards/lead_protection", &[("accept", "application/json")], Body::empty()).await;
    let concepts = &reply.json()["concept_network"]["concepts"];
    assert_eq!(concepts.as_array().unwrap().len(), 5);
}

#[tokio::test]
async fn html_profile_and_negotiation() {
    let (_dir, app) = service();
    post_card(&app, &build_ink_leak_fixture()).await;
    let html = call(&app, Method::GET, "/cards/ink_leak_effect", &[("accept", "text/html")], Body::empty()).await;
    assert!(html.headers[header::CONTENT_TYPE].to_str().unwrap().starts_with("text/html"));
    assert!(html.body.starts_with("<!DOCTYPE html>"));

    let forced = call(&app, Method::GET, "/cards/ink_leak_effect?profile=json", &[("accept", "text/html")], Body::empty()).await;
    assert_eq!(forced.headers[header::CONTENT_TYPE], "application/json");

    let unknown = get(&app, "/cards/ink_leak_effect?profile=pdf").await;
    assert_eq!(unknown.status, StatusCode::NOT_ACCEPTABLE);
    assert_eq!(unknown.json()["code"], "NOT_ACCEPTABLE");
}

#[tokio::test]
async fn capture_errors_use_the_envelope() {
    let (_dir, app) = service();
    let card = build_lead_protection_fixture();
    post_card(&app, &card).await;

    let dup = post_card(&app, &card).await;
    assert_eq!(dup.status, StatusCode::CONFLICT);
    assert_eq!(dup.json()["code"], "DUPLICATE_ID");

    let mut edited = card.clone();
    edited.metadata.title = "Lead protection, second edition".into();
    let uri = "/cards?overwrite=true";
    let replaced = call(&app, Method::POST, uri, &[], serialize_card(&edited).unwrap()).await;
    assert_eq!(replaced.status, StatusCode::CREATED);

    let xml = serialize_card(&card).unwrap();
    let start = xml.find("<concept-network").unwrap();
    let end = xml.find("</concept-network>").unwrap() + "</concept-network>".len();
    let mut broken = xml.clone();
    broken.replace_range(start..end, "");
    let broken = broken.replace("lead_protection", "other_card");
    let missing = call(&app, Method::POST, "/cards", &[], broken).await;
    assert_eq!(missing.status, StatusCode::BAD_REQUEST);
    let body = missing.json();
    assert_eq!(body["code"], "VALIDATION_FAILED");
    let codes: Vec<&str> = body["detail"].as_array().unwrap().iter().map(|i| i["code"].as_str().unwrap()).collect();
    assert_eq!(codes, ["MISSING_SECTION"]);

    let garbage = call(&app, Method::POST, "/cards", &[], "<knowledge-card").await;
    assert_eq!(garbage.status, StatusCode::BAD_REQUEST);

    let absent = get(&app, "/cards/nobody").await;
    assert_eq!(absent.status, StatusCode::NOT_FOUND);
    assert_eq!(absent.json()["code"], "NOT_FOUND");
    assert_eq!(get(&app, "/nowhere").await.status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn listing_and_delete() {
    let (_dir, app) = service();
    post_card(&app, &build_lead_protection_fixture()).await;
    post_card(&app, &build_ink_leak_fixture()).await;
    let all = get(&app, "/cards").await.json();
    assert_eq!(all.as_array().unwrap().len(), 2);
    let kind = build_ink_leak_fixture().kind.to_string();
    let some = get(&app, &format!("/cards?kind={kind}")).await.json();
    assert_eq!(some.as_array().unwrap().len(), 1);
    assert_eq!(some[0]["id"], "ink_leak_effect");
    assert_eq!(get(&app, "/cards?kind=nonsense").await.status, StatusCode::BAD_REQUEST);

    let gone = call(&app, Method::DELETE, "/cards/ink_leak_effect", &[], Body::empty()).await;
    assert_eq!(gone.status, StatusCode::NO_CONTENT);
    assert_eq!(get(&app, "/cards/ink_leak_effect").await.status, StatusCode::NOT_FOUND);
    let again = call(&app, Method::DELETE, "/cards/ink_leak_effect", &[], Body::empty()).await;
    assert_eq!(again.status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn related_cards() {
    let (_dir, app) = service();
    post_card(&app, &build_lead_protection_fixture()).await;
    let agg = get(&app, "/cards/lead_protection/related?relation=aggregation").await;
    assert_eq!(agg.status, StatusCode::OK);
    assert_eq!(resources(&agg), ["http://localhost/Cap", "http://localhost/mecanism"]);
    assert!(agg.json()[0]["card_id"].is_string());

    let plain = get(&app, "/cards/lead_protection/related?relation=semantique_metier").await;
    assert!(resources(&plain).is_empty());
    let inferred = get(&app, "/cards/lead_protection/related?relation=semantique_metier&infer=true").await;
    let comp = get(&app, "/cards/lead_protection/related?relation=composition").await;
    let mut union = resources(&agg);
    union.extend(resources(&comp));
    union.sort();
    union.dedup();
    assert_eq!(resources(&inferred), union);

    let color = get(&app, "/cards/lead_protection/related?relation=color").await;
    assert_eq!(color.status, StatusCode::BAD_REQUEST);
    assert_eq!(color.json()["code"], "UNKNOWN_RELATION");
    let bad_flag = get(&app, "/cards/lead_protection/related?relation=aggregation&infer=maybe").await;
    assert_eq!(bad_flag.status, StatusCode::BAD_REQUEST);
    assert_eq!(get(&app, "/cards/nobody/related?relation=aggregation").await.status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn graph_expansion() {
    let (_dir, app) = service();
    post_card(&app, &build_lead_protection_fixture()).await;
    let g = get(&app, "/graph?root=Lead_protection&depth=2").await.json();
    assert_eq!(g["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(g["edges"].as_array().unwrap().len(), 4);
    assert!(g["nodes"].as_array().unwrap().iter().all(|n| n["card_id"] == "lead_protection"));

    let same = get(&app, "/graph?root=Lead_protection").await.json();
    assert_eq!(same, g);
    let zero = get(&app, "/graph?root=Lead_protection&depth=0").await.json();
    assert_eq!((zero["nodes"].as_array().unwrap().len(), zero["edges"].as_array().unwrap().len()), (1, 0));
    let lonely = get(&app, "/graph?root=Nothing_here").await.json();
    assert_eq!(lonely["nodes"].as_array().unwrap().len(), 1);
    assert!(lonely["nodes"][0]["card_id"].is_null());

    for bad in ["depth=11", "depth=-1", "depth=two"] {
        let reply = get(&app, &format!("/graph?root=Lead_protection&{bad}")).await;
        assert_eq!(reply.status, StatusCode::BAD_REQUEST, "{bad}");
    }
    assert_eq!(get(&app, "/graph").await.status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn constraint_check() {
    let (_dir, app) = service();
    let request = |interior: f64| {
        json!({
            "constraint": INTERIOR_DIAMETER_CONSTRAINT,
            "bindings": {
                "interior_diameter": interior,
                "external_tip_diameter": 2.0,
                "cone_length": 5.0,
                "cone_angle": 30.0,
            },
            "angle_unit": "degrees",
        })
        .to_string()
    };
    let ok = call(&app, Method::POST, "/check", &[], request(7.0)).await.json();
    assert_eq!(ok["holds"], true);
    assert_eq!(ok["residual"], 0.0);
    let bad = call(&app, Method::POST, "/check", &[], request(7.1)).await.json();
    assert_eq!(bad["holds"], false);
    assert!((bad["residual"].as_f64().unwrap() - 0.1).abs() <= 1e-12);

    let unbound = json!({"constraint": INTERIOR_DIAMETER_CONSTRAINT, "bindings": {"interior_diameter": 7.0}});
    let reply = call(&app, Method::POST, "/check", &[], unbound.to_string()).await;
    assert_eq!(reply.status, StatusCode::BAD_REQUEST);
    assert_eq!(reply.json()["code"], "UNBOUND_IDENT");

    let broken = json!({"constraint": "context x inv : a = = b", "bindings": {}});
    let reply = call(&app, Method::POST, "/check", &[], broken.to_string()).await;
    assert_eq!(reply.status, StatusCode::BAD_REQUEST);
    assert_eq!(reply.json()["code"], "PARSE_ERROR");
    assert!(reply.json()["detail"]["offset"].is_u64());

    let not_json = call(&app, Method::POST, "/check", &[], "{").await;
    assert_eq!(not_json.status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn ontology_listing() {
    let (_dir, app) = service();
    let props = get(&app, "/ontology").await.json();
    let props = props.as_array().unwrap();
    assert_eq!(props.len(), 4);
    let comp = props
        .iter()
        .find(|p| p["property"].as_str().unwrap().ends_with("#composition"))
        .unwrap();
    assert!(comp["super_properties"][0].as_str().unwrap().ends_with("#semantique_metier"));
    assert_eq!(comp["labels"][0]["lang"], "Fr");

    let dir = tempfile::tempdir().unwrap();
    let schema = dir.path().join("empty.rdf");
    std::fs::write(
        &schema,
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"></rdf:RDF>",
    )
    .unwrap();
    let store = CardStore::open(
        dir.path().join("store"),
        StoreOptions {
            create: true,
            schema_path: Some(schema),
            ..StoreOptions::default()
        },
    )
    .unwrap();
    let empty = get(&router(App::new(store)), "/ontology").await.json();
    assert_eq!(empty, json!([]));
}

#[tokio::test(flavor = "multi_thread", worker_threads = 4)]
async fn reads_see_the_latest_write() {
    let (_dir, app) = service();
    let mut card = build_lead_protection_fixture();
    post_card(&app, &card).await;
    let original = card.metadata.title.clone();
    let mut readers = Vec::new();
    for _ in 0..4 {
        let app = app.clone();
        let original = original.clone();
        readers.push(tokio::spawn(async move {
            for _ in 0..20 {
                let reply = get(&app, "/cards/lead_protection?profile=json").await;
                assert_eq!(reply.status, StatusCode::OK);
                let seen: KnowledgeCard = serde_json::from_str(&reply.body).unwrap();
                assert!(seen.metadata.title == original || seen.metadata.title.starts_with('v'));
            }
        }));
    }
    for n in 0..10 {
        card.metadata.title = format!("v{n}");
        let reply = call(&app, Method::POST, "/cards?overwrite=true", &[], serialize_card(&card).unwrap()).await;
        assert_eq!(reply.status, StatusCode::CREATED);
        let back: KnowledgeCard = serde_json::from_str(&get(&app, "/cards/lead_protection?profile=json").await.body).unwrap();
        assert_eq!(back, card);
    }
    for r in readers {
        r.await.unwrap();
    }
}
