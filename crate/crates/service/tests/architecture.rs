//! The web layer reaches storage only through the application layer.

const WEB_LAYER: &[(&str, &str)] = &[
    ("http.rs", include_str!("../src/http.rs")),
    ("profile.rs", include_str!("../src/profile.rs")),
];

const STORAGE: &[&str] = &["knowcard_core::store", "CardStore", "std::fs", "tokio::fs", "File::", "spawn_blocking"];

#[test]
fn web_layer_never_touches_storage() {
    for (file, source) in WEB_LAYER {
        for needle in STORAGE {
            assert!(!source.contains(needle), "{file} mentions {needle}");
        }
    }
}

#[test]
fn application_layer_owns_the_store() {
    let app = include_str!("../src/app.rs");
    assert!(app.contains("CardStore"));
    let lib = include_str!("../src/lib.rs");
    assert!(!lib.contains("CardStore::open"));
}
