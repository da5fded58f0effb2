use std::collections::{BTreeMap, BTreeSet};

use super::term::{Iri, Namespaces, Subject, Term, Triple};
use super::RdfError;

/// Where a triple came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    Asserted,
    Inferred,
}

/// A set of triples with subject, predicate and object indexes.
///
/// Iteration and query results follow the `Triple` ordering: subject, then
/// predicate, then object.
#[derive(Debug, Clone, Default)]
pub struct TripleStore {
    triples: BTreeMap<Triple, Origin>,
    by_subject: BTreeMap<Subject, BTreeSet<Triple>>,
    by_predicate: BTreeMap<Iri, BTreeSet<Triple>>,
    by_object: BTreeMap<Term, BTreeSet<Triple>>,
    pub namespaces: Namespaces,
}

impl PartialEq for TripleStore {
    fn eq(&self, other: &Self) -> bool {
        self.triples == other.triples
    }
}

impl Eq for TripleStore {}

impl TripleStore {
    pub fn new() -> Self {
        TripleStore::default()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.triples.contains_key(t)
    }

    pub fn origin(&self, t: &Triple) -> Option<Origin> {
        self.triples.get(t).copied()
    }

    /// Adds an asserted triple. Returns false if it was already asserted.
    /// An inferred triple that gets asserted is upgraded.
    pub fn insert(&mut self, t: Triple) -> bool {
        match self.triples.get_mut(&t) {
            Some(o @ Origin::Inferred) => {
                *o = Origin::Asserted;
                true
            }
            Some(Origin::Asserted) => false,
            None => {
                self.index(t, Origin::Asserted);
                true
            }
        }
    }

    /// Adds an inferred triple unless the triple is already present.
    pub fn insert_inferred(&mut self, t: Triple) -> bool {
        if self.triples.contains_key(&t) {
            return false;
        }
        self.index(t, Origin::Inferred);
        true
    }

    fn index(&mut self, t: Triple, origin: Origin) {
        self.by_subject.entry(t.subject.clone()).or_default().insert(t.clone());
        self.by_predicate.entry(t.predicate.clone()).or_default().insert(t.clone());
        self.by_object.entry(t.object.clone()).or_default().insert(t.clone());
        self.triples.insert(t, origin);
    }

    pub fn remove(&mut self, t: &Triple) -> bool {
        if self.triples.remove(t).is_none() {
            return false;
        }
        fn unindex<K: Ord>(map: &mut BTreeMap<K, BTreeSet<Triple>>, key: &K, t: &Triple) {
            if let Some(set) = map.get_mut(key) {
                set.remove(t);
                if set.is_empty() {
                    map.remove(key);
                }
            }
        }
        unindex(&mut self.by_subject, &t.subject, t);
        unindex(&mut self.by_predicate, &t.predicate, t);
        unindex(&mut self.by_object, &t.object, t);
        true
    }

    pub fn clear(&mut self) {
        let namespaces = std::mem::take(&mut self.namespaces);
        *self = TripleStore {
            namespaces,
            ..TripleStore::default()
        };
    }

    pub fn extend(&mut self, triples: impl IntoIterator<Item = Triple>) {
        for t in triples {
            self.insert(t);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Triple, Origin)> {
        self.triples.iter().map(|(t, o)| (t, *o))
    }

    pub fn triples(&self) -> impl Iterator<Item = &Triple> {
        self.triples.keys()
    }

    pub fn asserted(&self) -> impl Iterator<Item = &Triple> {
        self.iter().filter(|(_, o)| *o == Origin::Asserted).map(|(t, _)| t)
    }

    pub fn inferred(&self) -> impl Iterator<Item = &Triple> {
        self.iter().filter(|(_, o)| *o == Origin::Inferred).map(|(t, _)| t)
    }

    /// The triples set, ignoring origin flags.
    pub fn triple_set(&self) -> BTreeSet<Triple> {
        self.triples.keys().cloned().collect()
    }

    /// Every triple matching the concrete positions; `None` is a wildcard.
    pub fn query(&self, s: Option<&Subject>, p: Option<&Iri>, o: Option<&Term>) -> Vec<Triple> {
        let candidates: Vec<&BTreeSet<Triple>> = [
            s.map(|s| self.by_subject.get(s)),
            p.map(|p| self.by_predicate.get(p)),
            o.map(|o| self.by_object.get(o)),
        ]
        .into_iter()
        .flatten()
        .map(|set| set.unwrap_or(&EMPTY))
        .collect();

        let matches = |t: &Triple| {
            s.is_none_or(|s| &t.subject == s)
                && p.is_none_or(|p| &t.predicate == p)
                && o.is_none_or(|o| &t.object == o)
        };
        match candidates.into_iter().min_by_key(|set| set.len()) {
            Some(set) => set.iter().filter(|t| matches(t)).cloned().collect(),
            None => self.triples.keys().cloned().collect(),
        }
    }

    /// Objects of `(s, p, ·)`.
    pub fn objects(&self, s: &Subject, p: &Iri) -> Vec<Term> {
        self.query(Some(s), Some(p), None).into_iter().map(|t| t.object).collect()
    }

    pub fn is_bag(&self, node: &Subject) -> bool {
        self.contains(&Triple::new(node.clone(), Iri::rdf("type"), Iri::rdf("Bag")))
    }

    /// Members of an `rdf:Bag` in index order.
    pub fn expand_members(&self, container: &Term) -> Result<Vec<Term>, RdfError> {
        let not_container = || RdfError::NotAContainer {
            term: format!("{container:?}"),
        };
        let node = container.as_subject().ok_or_else(not_container)?;
        if !self.is_bag(&node) {
            return Err(not_container());
        }
        let mut members: BTreeMap<usize, Vec<Term>> = BTreeMap::new();
        for t in self.by_subject.get(&node).into_iter().flatten() {
            if let Some(n) = t.predicate.member_index() {
                members.entry(n).or_default().push(t.object.clone());
            }
        }
        let mut out = Vec::with_capacity(members.len());
        for (expected, (n, terms)) in (1..).zip(members) {
            if n != expected {
                return Err(RdfError::GapInMembership {
                    container: format!("{container:?}"),
                    index: expected,
                });
            }
            if terms.len() > 1 {
                return Err(RdfError::GapInMembership {
                    container: format!("{container:?}"),
                    index: n,
                });
            }
            out.extend(terms);
        }
        Ok(out)
    }

    /// Blank node ids in use.
    pub fn blank_nodes(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for t in self.triples.keys() {
            if let Subject::Blank(b) = &t.subject {
                out.insert(b.clone());
            }
            if let Term::Blank(b) = &t.object {
                out.insert(b.clone());
            }
        }
        out
    }
}

static EMPTY: BTreeSet<Triple> = BTreeSet::new();

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Iri {
        Iri::new(format!("http://localhost/{s}")).unwrap()
    }

    fn bag(store: &mut TripleStore, id: &str, members: &[&str]) -> Term {
        let node = Subject::Blank(id.into());
        store.insert(Triple::new(node.clone(), Iri::rdf("type"), Iri::rdf("Bag")));
        for (i, m) in members.iter().enumerate() {
            store.insert(Triple::new(node.clone(), Iri::member(i + 1), iri(m)));
        }
        node.into()
    }

    #[test]
    fn set_semantics() {
        let mut store = TripleStore::new();
        let t = Triple::new(iri("Lead_protection"), Iri::lb("aggregation"), Term::Blank("bag1".into()));
        assert!(store.insert(t.clone()));
        assert!(!store.insert(t.clone()));
        assert_eq!(store.len(), 1);
        assert!(store.remove(&t));
        assert!(store.is_empty());
        assert!(store.query(None, None, None).is_empty());
    }

    #[test]
    fn query_uses_any_position() {
        let mut store = TripleStore::new();
        let b = bag(&mut store, "b", &["Closer", "clip"]);
        store.insert(Triple::new(iri("Cap"), Iri::lb("composition"), b.clone()));
        let hits = store.query(Some(&iri("Cap").into()), Some(&Iri::lb("composition")), None);
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].object, b);
        assert!(store.query(Some(&iri("clip").into()), None, None).is_empty());
        assert_eq!(store.query(None, None, Some(&iri("clip").into())).len(), 1);
    }

    #[test]
    fn bag_members_in_order() {
        let mut store = TripleStore::new();
        let b = bag(&mut store, "b", &["mecanism", "Cap"]);
        let members = store.expand_members(&b).unwrap();
        assert_eq!(members, vec![Term::Iri(iri("mecanism")), Term::Iri(iri("Cap"))]);
        let err = store.expand_members(&Term::Iri(iri("Cap"))).unwrap_err();
        assert_eq!(err.code(), "NOT_A_CONTAINER");
    }

    #[test]
    fn gap_detected() {
        let mut store = TripleStore::new();
        let b = bag(&mut store, "b", &["a", "b", "c"]);
        store.remove(&Triple::new(Subject::Blank("b".into()), Iri::member(2), iri("b")));
        assert_eq!(store.expand_members(&b).unwrap_err().code(), "GAP_IN_MEMBERSHIP");
    }

    #[test]
    fn inferred_upgrades_to_asserted() {
        let mut store = TripleStore::new();
        let t = Triple::new(iri("a"), Iri::lb("p"), iri("b"));
        assert!(store.insert_inferred(t.clone()));
        assert_eq!(store.origin(&t), Some(Origin::Inferred));
        assert!(store.insert(t.clone()));
        assert_eq!(store.origin(&t), Some(Origin::Asserted));
        assert!(!store.insert_inferred(t.clone()));
        assert_eq!(store.origin(&t), Some(Origin::Asserted));
    }
}
