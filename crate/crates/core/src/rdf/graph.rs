use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::store::{Origin, TripleStore};
use super::term::{Iri, Subject, Term, LB_NS};
use super::RdfError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphNode {
    pub resource: String,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    /// Local name of the `lb:` property, e.g. `composition`.
    pub relation: String,
    pub inferred: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Neighborhood {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

/// Breadth-first expansion from `root` over `lb:` properties, Bags expanded,
/// up to `depth` hops. Nodes come in visiting order; edges are listed once.
pub fn neighborhood(store: &TripleStore, root: &Iri, depth: usize) -> Result<Neighborhood, RdfError> {
    let mut out = Neighborhood::default();
    let mut seen: BTreeMap<Iri, usize> = BTreeMap::new();
    let mut edges_seen = BTreeSet::new();
    let mut queue = VecDeque::from([(root.clone(), 0)]);
    seen.insert(root.clone(), 0);
    out.nodes.push(GraphNode {
        resource: root.to_string(),
        depth: 0,
    });

    while let Some((node, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for t in store.query(Some(&Subject::Iri(node.clone())), None, None) {
            let Some(relation) = t.predicate.as_str().strip_prefix(LB_NS) else {
                continue;
            };
            let inferred = store.origin(&t) == Some(Origin::Inferred);
            let targets = match t.object.as_subject() {
                Some(s) if store.is_bag(&s) => store.expand_members(&t.object)?,
                _ => vec![t.object.clone()],
            };
            for target in targets {
                let Term::Iri(target) = target else { continue };
                if edges_seen.insert((node.clone(), target.clone(), relation.to_string())) {
                    out.edges.push(GraphEdge {
                        from: node.to_string(),
                        to: target.to_string(),
                        relation: relation.to_string(),
                        inferred,
                    });
                }
                if !seen.contains_key(&target) {
                    seen.insert(target.clone(), d + 1);
                    out.nodes.push(GraphNode {
                        resource: target.to_string(),
                        depth: d + 1,
                    });
                    queue.push_back((target, d + 1));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::{lbn_schema, load_rdfxml, saturate, LEAD_PROTECTION_RDF};

    fn res(s: &str) -> Iri {
        Iri::new(format!("http://localhost/{s}")).unwrap()
    }

    #[test]
    fn lead_protection_two_hops() {
        let store = load_rdfxml(LEAD_PROTECTION_RDF).unwrap().into_store();
        let g = neighborhood(&store, &res("Lead_protection"), 2).unwrap();
        assert_eq!(g.nodes.len(), 5);
        assert_eq!(g.edges.len(), 4);
        let one = neighborhood(&store, &res("Lead_protection"), 1).unwrap();
        assert_eq!((one.nodes.len(), one.edges.len()), (3, 2));
        let zero = neighborhood(&store, &res("Lead_protection"), 0).unwrap();
        assert_eq!((zero.nodes.len(), zero.edges.len()), (1, 0));
        let unknown = neighborhood(&store, &res("Nib"), 2).unwrap();
        assert_eq!((unknown.nodes.len(), unknown.edges.len()), (1, 0));
    }

    #[test]
    fn saturated_store_adds_labelled_edges() {
        let store = load_rdfxml(LEAD_PROTECTION_RDF).unwrap().into_store();
        let sat = saturate(&store, &lbn_schema());
        let g = neighborhood(&sat, &res("Lead_protection"), 2).unwrap();
        assert_eq!(g.nodes.len(), 5);
        assert_eq!(g.edges.len(), 8);
        assert_eq!(g.edges.iter().filter(|e| e.inferred).count(), 4);
        assert!(g.edges.iter().filter(|e| e.inferred).all(|e| e.relation == "semantique_metier"));
    }
}
