use std::io::{BufRead, BufReader, Read, Write};
use std::net::{TcpListener, TcpStream};
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use knowcard_core::cardxml::{parse_card, serialize_card};
use knowcard_core::model::{build_lead_protection_fixture, INTERIOR_DIAMETER_CONSTRAINT};
use knowcard_core::store::{repository_names, CardStore, StoreOptions};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn knowcard(store: &Path, args: &[&str]) -> Run {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_knowcard"))
        .args(args)
        .arg("--store")
        .arg(store)
        .env_remove("KNOWCARD_BASE")
        .env_remove("KNOWCARD_SCHEMA")
        .output()
        .unwrap();
    Run {
        code: status.code().unwrap_or(-1),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn fixture_file(dir: &Path) -> PathBuf {
    write(dir, "lead.xml", &serialize_card(&build_lead_protection_fixture()).unwrap())
}

fn imported() -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    let run = knowcard(&store, &["import", s(&fixture_file(dir.path()))]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    (dir, store)
}

fn open(store: &Path) -> CardStore {
    CardStore::open(store, StoreOptions::default()).unwrap()
}

#[test]
fn import_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    let file = fixture_file(dir.path());
    let run = knowcard(&store, &["import", s(&file)]);
    assert_eq!((run.code, run.stdout.trim()), (0, "lead_protection"));
    assert_eq!(open(&store).get_card("lead_protection").unwrap(), build_lead_protection_fixture());

    let out = dir.path().join("out.xml");
    assert_eq!(knowcard(&store, &["export", "lead_protection", s(&out)]).code, 0);
    let exported = std::fs::read_to_string(&out).unwrap();
    assert_eq!(exported, serialize_card(&build_lead_protection_fixture()).unwrap());
    assert_eq!(knowcard(&store, &["export", "lead_protection"]).stdout, exported);

    let missing = knowcard(&store, &["export", "nobody", s(&out)]);
    assert_eq!(missing.code, 1);
    assert!(missing.stderr.contains("NOT_FOUND"));

    let fresh = dir.path().join("fresh");
    assert_eq!(knowcard(&fresh, &["import", s(&out)]).code, 0);
    assert_eq!(open(&fresh).get_card("lead_protection").unwrap(), parse_card(&exported).unwrap());

    let again = knowcard(&store, &["import", s(&file)]);
    assert_eq!(again.code, 1);
    assert!(again.stderr.contains("DUPLICATE_ID"));
    assert_eq!(knowcard(&store, &["import", s(&file), "--overwrite"]).code, 0);
}

#[test]
fn import_failures() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    let xml = serialize_card(&build_lead_protection_fixture()).unwrap();
    let start = xml.find("<concept-network").unwrap();
    let end = xml.find("</concept-network>").unwrap() + "</concept-network>".len();
    let mut broken = xml.clone();
    broken.replace_range(start..end, "");
    let bad = write(dir.path(), "bad.xml", &broken);

    let run = knowcard(&store, &["import", s(&bad)]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("MISSING_SECTION"), "{}", run.stderr);

    let run = knowcard(&store, &["import", s(&dir.path().join("absent.xml"))]);
    assert_eq!(run.code, 2);

    let json = knowcard(&store, &["import", s(&bad), "--json"]);
    let envelope: serde_json::Value = serde_json::from_str(json.stderr.trim()).unwrap();
    assert_eq!(envelope["code"], "VALIDATION_FAILED");
    assert_eq!(envelope["detail"][0]["code"], "MISSING_SECTION");
}

#[test]
fn validate_command() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("unused");
    let good = knowcard(&store, &["validate", s(&fixture_file(dir.path()))]);
    assert_eq!(good.code, 0);
    assert!(good.stdout.contains("valid"));
    let bad = write(dir.path(), "bad.xml", "<knowledge-card id=\"x\"/>");
    let run = knowcard(&store, &["validate", s(&bad), "--json"]);
    assert_eq!(run.code, 1);
    let report: serde_json::Value = serde_json::from_str(run.stdout.trim()).unwrap();
    assert_eq!(report["valid"], false);
    assert!(!store.exists(), "validate does not create a store");
}

fn bindings(interior: &str) -> String {
    format!(
        "angle_unit = degrees\nexternal_tip_diameter = 2.0\ncone_length = 5.0\ncone_angle = 30\ninterior_diameter = {interior}\n"
    )
}

#[test]
fn check_command() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("unused");
    let constraint = write(dir.path(), "rule.ocl", INTERIOR_DIAMETER_CONSTRAINT);
    let ok = write(dir.path(), "ok.txt", &bindings("7.0"));
    let off = write(dir.path(), "off.txt", &bindings("7.1"));
    let partial = write(dir.path(), "partial.txt", "interior_diameter = 7.0\n");

    let run = knowcard(&store, &["check", s(&constraint), s(&ok)]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.contains("holds: true"));
    assert!(run.stdout.contains("residual: 0\n"));

    let run = knowcard(&store, &["check", s(&constraint), s(&off)]);
    assert_eq!(run.code, 3);
    assert!(run.stdout.contains("residual: 0.1\n"), "{}", run.stdout);

    let run = knowcard(&store, &["check", s(&constraint), s(&off), "--json"]);
    let report: serde_json::Value = serde_json::from_str(run.stdout.trim()).unwrap();
    assert!((report["residual"].as_f64().unwrap() - 0.1).abs() <= 1e-12);

    let run = knowcard(&store, &["check", s(&constraint), s(&partial)]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("UNBOUND_IDENT"));

    let broken = write(dir.path(), "broken.ocl", "context x inv : a = = b");
    let run = knowcard(&store, &["check", s(&broken), s(&ok)]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("PARSE_ERROR") && run.stderr.contains("offset"), "{}", run.stderr);

    let run = knowcard(&store, &["check", s(&broken), s(&dir.path().join("nope"))]);
    assert_eq!(run.code, 2);
}

fn lines(run: &Run) -> Vec<&str> {
    run.stdout.lines().collect()
}

#[test]
fn query_matches_the_library() {
    let (_dir, store) = imported();
    let run = knowcard(&store, &["query", "Lead_protection", "aggregation"]);
    assert_eq!(lines(&run), ["http://localhost/Cap", "http://localhost/mecanism"]);
    let run = knowcard(&store, &["query", "Cap", "semantique_metier", "--infer"]);
    assert_eq!(lines(&run), ["http://localhost/Closer", "http://localhost/clip"]);
    let run = knowcard(&store, &["query", "clip", "composition"]);
    assert_eq!((run.code, run.stdout.as_str()), (0, ""));
    let run = knowcard(&store, &["query", "Cap", "color"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("UNKNOWN_RELATION"));

    let library = open(&store);
    for root in ["Lead_protection", "Cap", "mecanism", "clip"] {
        for relation in ["semantique_metier", "composition", "aggregation", "association"] {
            for infer in [false, true] {
                let mut args = vec!["query", root, relation];
                if infer {
                    args.push("--infer");
                }
                let cli = knowcard(&store, &args);
                let resource = library.resolve_resource(root).unwrap();
                let expected: Vec<String> = library
                    .find_related_cards(&resource, &knowcard_core::rdf::Iri::lb(relation), infer)
                    .unwrap()
                    .into_iter()
                    .map(|r| r.resource)
                    .collect();
                assert_eq!(lines(&cli), expected, "{args:?}");
            }
        }
    }

    let nowhere = tempfile::tempdir().unwrap();
    let run = knowcard(&nowhere.path().join("missing"), &["query", "Cap", "composition"]);
    assert_eq!(run.code, 2);
}

fn http_get(addr: &str, path: &str) -> (u16, String) {
    let mut stream = TcpStream::connect(addr).unwrap();
    write!(stream, "GET {path} HTTP/1.1\r\nHost: {addr}\r\nConnection: close\r\n\r\n").unwrap();
    let mut response = String::new();
    stream.read_to_string(&mut response).unwrap();
    let status = response.split(' ').nth(1).unwrap().parse().unwrap();
    (status, response)
}

#[test]
fn serve_command() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    let refused = knowcard(&store, &["serve", "--port", "0"]);
    assert_eq!(refused.code, 2);

    let mut child = Command::new(env!("CARGO_BIN_EXE_knowcard"))
        .args(["serve", "--port", "0", "--init", "--store", s(&store)])
        .env_remove("KNOWCARD_BIND")
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    let mut first = String::new();
    BufReader::new(child.stdout.take().unwrap()).read_line(&mut first).unwrap();
    let addr = first.trim().strip_prefix("listening on http://").unwrap().to_string();

    let (status, body) = http_get(&addr, "/ontology");
    assert_eq!(status, 200);
    assert!(body.contains("semantique_metier"));
    for repo in repository_names() {
        assert!(store.join(&repo).is_dir(), "{repo}");
    }

    let busy = knowcard(&store, &["serve", "--bind", &addr]);
    assert_eq!(busy.code, 2);
    assert!(busy.stderr.contains("BIND_FAILED"));
    child.kill().unwrap();
    child.wait().unwrap();

    let taken = TcpListener::bind("127.0.0.1:0").unwrap();
    let port = taken.local_addr().unwrap().port().to_string();
    let run = knowcard(&store, &["serve", "--port", &port]);
    assert_eq!(run.code, 2);
}
