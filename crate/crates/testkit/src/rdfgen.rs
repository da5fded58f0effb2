//! Random triple stores over a small vocabulary, and acyclic property
//! schemas over the same predicates.

use knowcard_core::rdf::{Iri, Literal, PropertySchema, Subject, Term, Triple, TripleStore};
use proptest::prelude::*;

pub const PREDICATES: usize = 10;

pub fn predicate(n: usize) -> Iri {
    if n < 4 {
        let names = ["semantique_metier", "composition", "aggregation", "association"];
        Iri::lb(names[n])
    } else {
        Iri::new(format!("http://example.org/vocab#p{n}")).expect("absolute")
    }
}

pub fn resource(n: usize) -> Iri {
    Iri::new(format!("http://localhost/r/{n}")).expect("absolute")
}

fn subject() -> impl Strategy<Value = Subject> {
    prop_oneof![
        4 => (0usize..40).prop_map(|n| Subject::Iri(resource(n))),
        1 => (0usize..5).prop_map(|n| Subject::Blank(format!("g{n}"))),
    ]
}

fn object() -> impl Strategy<Value = Term> {
    prop_oneof![
        4 => (0usize..40).prop_map(|n| Term::Iri(resource(n))),
        1 => "[a-z &<]{0,6}".prop_map(|s| Term::Literal(Literal::plain(s))),
        1 => ("[a-z]{1,4}", prop::sample::select(vec!["fr", "en"]))
            .prop_map(|(s, l)| Term::Literal(Literal::tagged(s, l))),
        1 => (0usize..5).prop_map(|n| Term::Blank(format!("g{n}"))),
    ]
}

pub fn triple() -> impl Strategy<Value = Triple> {
    (subject(), 0..PREDICATES, object()).prop_map(|(s, p, o)| Triple::new(s, predicate(p), o))
}

pub fn store(max: usize) -> impl Strategy<Value = TripleStore> {
    prop::collection::vec(triple(), 0..=max).prop_map(|ts| {
        let mut store = TripleStore::new();
        store.extend(ts);
        store
    })
}

/// Edges run from higher to lower predicate index, which rules out cycles.
pub fn schema(max_edges: usize) -> impl Strategy<Value = PropertySchema> {
    prop::collection::vec((0..PREDICATES, 0..PREDICATES), 0..=max_edges).prop_map(|pairs| {
        let mut schema = PropertySchema::new();
        for n in 0..PREDICATES {
            schema.declare(predicate(n));
        }
        for (a, b) in pairs {
            if a != b {
                schema
                    .add_super(predicate(a.max(b)), predicate(a.min(b)))
                    .expect("downward edges are acyclic");
            }
        }
        schema
    })
}
