//! RDF level: triples, the `lbn-v1.2` property schema, `subPropertyOf`
//! saturation, and an RDF/XML subset codec.

mod graph;
mod iso;
mod lines;
mod rdfxml;
mod schema;
mod store;
mod term;

use thiserror::Error;

pub use graph::{neighborhood, GraphEdge, GraphNode, Neighborhood};
pub use iso::isomorphic;
pub use lines::{format_subject, format_term, format_triple, parse_lines, write_lines};
pub use rdfxml::{load_rdfxml, load_rdfxml_with_base, serialize_rdfxml, RdfXmlDocument};
pub use schema::{explain, related_resources, saturate, Label, PropertyDef, PropertySchema};
pub use store::{Origin, TripleStore};
pub use term::{Iri, Literal, Namespaces, Subject, Term, Triple, DC_NS, LB_NS, RDFS_NS, RDF_NS};

/// The ontology shipped with the crate.
pub const LBN_SCHEMA_RDF: &str = include_str!("../../fixtures/lbn-v1.2.rdf");
/// The instance fragment describing the lead protection network.
pub const LEAD_PROTECTION_RDF: &str = include_str!("../../fixtures/lead_protection.rdf");
/// The single-property schema fragment describing `composition`.
pub const COMPOSITION_SCHEMA_RDF: &str = include_str!("../../fixtures/composition-schema.rdf");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RdfError {
    #[error("bad IRI '{iri}': {reason}")]
    BadIri { iri: String, reason: String },
    #[error("ill-formed triple: {reason}")]
    BadTriple { reason: &'static str },
    #[error("{term} is not an rdf:Bag")]
    NotAContainer { term: String },
    #[error("membership of {container} has no single member at index {index}")]
    GapInMembership { container: String, index: usize },
    #[error("unsupported RDF/XML at {path}: {message}")]
    UnsupportedRdfXml { path: String, message: String },
    #[error("malformed XML at offset {offset}: {message}")]
    MalformedXml { offset: usize, message: String },
    #[error("subPropertyOf edge {sub} -> {sup} would close a cycle")]
    SchemaCycle { sub: String, sup: String },
    #[error("cannot serialize: {message}")]
    Unserializable { message: String },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

impl RdfError {
    pub fn code(&self) -> &'static str {
        match self {
            RdfError::BadIri { .. } => "BAD_IRI",
            RdfError::BadTriple { .. } => "BAD_TRIPLE",
            RdfError::NotAContainer { .. } => "NOT_A_CONTAINER",
            RdfError::GapInMembership { .. } => "GAP_IN_MEMBERSHIP",
            RdfError::UnsupportedRdfXml { .. } => "UNSUPPORTED_RDFXML",
            RdfError::MalformedXml { .. } => "MALFORMED_XML",
            RdfError::SchemaCycle { .. } => "SCHEMA_CYCLE",
            RdfError::Unserializable { .. } => "UNSERIALIZABLE",
            RdfError::Line { .. } => "BAD_LINE",
        }
    }
}

/// The `lbn-v1.2` ontology.
pub fn lbn_schema() -> PropertySchema {
    load_rdfxml(LBN_SCHEMA_RDF)
        .expect("bundled ontology loads")
        .schema
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(s: &str) -> Iri {
        Iri::new(format!("http://localhost/{s}")).unwrap()
    }

    #[test]
    fn instance_fragment_has_eight_triples() {
        let store = load_rdfxml(LEAD_PROTECTION_RDF).unwrap().into_store();
        assert_eq!(store.len(), 8);
        let bag_types = store.query(None, Some(&Iri::rdf("type")), Some(&Iri::rdf("Bag").into()));
        assert_eq!(bag_types.len(), 2);
        let memberships = store.triples().filter(|t| t.predicate.member_index().is_some()).count();
        assert_eq!(memberships, 4);

        let agg = store.query(Some(&res("Lead_protection").into()), Some(&Iri::lb("aggregation")), None);
        assert_eq!(agg.len(), 1);
        assert_eq!(
            store.expand_members(&agg[0].object).unwrap(),
            vec![Term::Iri(res("mecanism")), Term::Iri(res("Cap"))]
        );
        let comp = store.query(Some(&res("Cap").into()), Some(&Iri::lb("composition")), None);
        assert_eq!(comp.len(), 1);
        assert_eq!(
            store.expand_members(&comp[0].object).unwrap(),
            vec![Term::Iri(res("Closer")), Term::Iri(res("clip"))]
        );
        assert!(store.query(Some(&res("clip").into()), None, None).is_empty());
    }

    #[test]
    fn composition_schema_fragment() {
        let doc = load_rdfxml(COMPOSITION_SCHEMA_RDF).unwrap();
        assert!(doc.triples.is_empty());
        let def = doc.schema.get(&Iri::lb("composition")).unwrap();
        assert_eq!(
            def.super_properties.iter().collect::<Vec<_>>(),
            vec![&Iri::lb("semantique_metier")]
        );
        assert_eq!(
            def.labels,
            vec![Label {
                text: "relation of strong aggregation between two resources".into(),
                lang: Some("Fr".into()),
            }]
        );
    }

    #[test]
    fn bundled_ontology() {
        let schema = lbn_schema();
        assert_eq!(schema.len(), 4);
        assert_eq!(schema.edge_count(), 3);
        for p in ["composition", "aggregation", "association"] {
            assert!(schema.get(&Iri::lb(p)).unwrap().super_properties.contains(&Iri::lb("semantique_metier")));
        }
        let fragment = load_rdfxml(COMPOSITION_SCHEMA_RDF).unwrap().schema;
        assert_eq!(
            schema.get(&Iri::lb("composition")),
            fragment.get(&Iri::lb("composition"))
        );
    }

    #[test]
    fn inference_over_fragment() {
        let store = load_rdfxml(LEAD_PROTECTION_RDF).unwrap().into_store();
        let schema = lbn_schema();
        let sat = saturate(&store, &schema);
        let lifted = sat.query(None, Some(&Iri::lb("semantique_metier")), None);
        assert_eq!(lifted.len(), 2);
        assert!(lifted.iter().all(|t| sat.origin(t) == Some(Origin::Inferred)));
        assert_eq!(sat.len(), 10);

        let related = |root: &str, p: &str, infer| related_resources(&store, &schema, &res(root), &Iri::lb(p), infer).unwrap();
        assert_eq!(related("Lead_protection", "aggregation", false), vec![res("Cap"), res("mecanism")]);
        assert_eq!(related("Lead_protection", "semantique_metier", true), vec![res("Cap"), res("mecanism")]);
        assert!(related("Lead_protection", "semantique_metier", false).is_empty());
        assert_eq!(related("Cap", "semantique_metier", true), vec![res("Closer"), res("clip")]);
        assert!(related("clip", "composition", false).is_empty());
    }

    #[test]
    fn fragment_round_trips_through_serializer() {
        let doc = load_rdfxml(LEAD_PROTECTION_RDF).unwrap();
        let store = doc.into_store();
        let schema = lbn_schema();
        let xml = serialize_rdfxml(&store, &schema).unwrap();
        let again = load_rdfxml(&xml).unwrap();
        assert_eq!(again.schema, schema);
        let again = again.into_store();
        assert!(isomorphic(&again.triple_set(), &store.triple_set()), "{xml}");
        assert_eq!(serialize_rdfxml(&again, &schema).unwrap(), xml);
    }
}
