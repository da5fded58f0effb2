use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::store::{Origin, TripleStore};
use super::term::{Iri, Subject, Term, Triple};
use super::RdfError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Label {
    pub text: String,
    pub lang: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyDef {
    pub labels: Vec<Label>,
    pub super_properties: BTreeSet<Iri>,
}

/// Declared properties and their `subPropertyOf` edges. The edge graph is
/// kept acyclic: an edge that would close a cycle is refused.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertySchema {
    properties: BTreeMap<Iri, PropertyDef>,
}

impl PropertySchema {
    pub fn new() -> Self {
        PropertySchema::default()
    }

    pub fn len(&self) -> usize {
        self.properties.len()
    }

    pub fn is_empty(&self) -> bool {
        self.properties.is_empty()
    }

    pub fn declare(&mut self, property: Iri) -> &mut PropertyDef {
        self.properties.entry(property).or_default()
    }

    pub fn get(&self, property: &Iri) -> Option<&PropertyDef> {
        self.properties.get(property)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Iri, &PropertyDef)> {
        self.properties.iter()
    }

    pub fn add_label(&mut self, property: Iri, text: impl Into<String>, lang: Option<String>) {
        let label = Label {
            text: text.into(),
            lang,
        };
        let def = self.declare(property);
        if !def.labels.contains(&label) {
            def.labels.push(label);
        }
    }

    /// Records `sub ⊑ sup`, declaring `sub` if needed.
    pub fn add_super(&mut self, sub: Iri, sup: Iri) -> Result<(), RdfError> {
        if sub == sup || self.super_closure(&sup).contains(&sub) {
            return Err(RdfError::SchemaCycle {
                sub: sub.to_string(),
                sup: sup.to_string(),
            });
        }
        self.declare(sub).super_properties.insert(sup);
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.properties.values().map(|d| d.super_properties.len()).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Iri, &Iri)> {
        self.properties
            .iter()
            .flat_map(|(sub, d)| d.super_properties.iter().map(move |sup| (sub, sup)))
    }

    /// Adds everything from `other`, refusing edges that would close a cycle.
    pub fn merge(&mut self, other: &PropertySchema) -> Result<(), RdfError> {
        for (p, def) in &other.properties {
            self.declare(p.clone());
            for l in &def.labels {
                self.add_label(p.clone(), l.text.clone(), l.lang.clone());
            }
        }
        for (sub, sup) in other.edges() {
            self.add_super(sub.clone(), sup.clone())?;
        }
        Ok(())
    }

    /// `p` and every property it is transitively a sub-property of.
    pub fn super_closure(&self, p: &Iri) -> BTreeSet<Iri> {
        let mut seen = BTreeSet::from([p.clone()]);
        let mut queue = VecDeque::from([p.clone()]);
        while let Some(q) = queue.pop_front() {
            if let Some(def) = self.properties.get(&q) {
                for sup in &def.super_properties {
                    if seen.insert(sup.clone()) {
                        queue.push_back(sup.clone());
                    }
                }
            }
        }
        seen
    }

    /// `p` and every property transitively below it.
    pub fn sub_closure(&self, p: &Iri) -> BTreeSet<Iri> {
        let mut seen = BTreeSet::from([p.clone()]);
        let mut changed = true;
        while changed {
            changed = false;
            for (sub, sup) in self.edges() {
                if seen.contains(sup) && !seen.contains(sub) {
                    seen.insert(sub.clone());
                    changed = true;
                }
            }
        }
        seen
    }

    /// A `subPropertyOf` chain from `sub` up to `sup`, both included.
    pub fn path(&self, sub: &Iri, sup: &Iri) -> Option<Vec<Iri>> {
        let mut parent: BTreeMap<Iri, Iri> = BTreeMap::new();
        let mut queue = VecDeque::from([sub.clone()]);
        let mut seen = BTreeSet::from([sub.clone()]);
        while let Some(q) = queue.pop_front() {
            if &q == sup {
                let mut chain = vec![q.clone()];
                let mut cur = q;
                while let Some(p) = parent.get(&cur) {
                    chain.push(p.clone());
                    cur = p.clone();
                }
                chain.reverse();
                return Some(chain);
            }
            for s in self.properties.get(&q).into_iter().flat_map(|d| &d.super_properties) {
                if seen.insert(s.clone()) {
                    parent.insert(s.clone(), q.clone());
                    queue.push_back(s.clone());
                }
            }
        }
        None
    }
}

/// Closes `store` under `subPropertyOf`: every `(s, p, o)` with `p ⊑* q`
/// yields `(s, q, o)`, flagged as inferred. Existing triples keep their flags.
pub fn saturate(store: &TripleStore, schema: &PropertySchema) -> TripleStore {
    let mut out = store.clone();
    let mut supers: BTreeMap<&Iri, BTreeSet<Iri>> = BTreeMap::new();
    for t in store.triples() {
        let ups = supers
            .entry(&t.predicate)
            .or_insert_with(|| schema.super_closure(&t.predicate));
        for q in ups.iter().filter(|q| *q != &t.predicate) {
            out.insert_inferred(Triple {
                subject: t.subject.clone(),
                predicate: q.clone(),
                object: t.object.clone(),
            });
        }
    }
    out
}

/// The asserted triple and schema chain that justify an inferred triple.
pub fn explain(store: &TripleStore, schema: &PropertySchema, t: &Triple) -> Option<(Triple, Vec<Iri>)> {
    if store.origin(t) == Some(Origin::Asserted) {
        return Some((t.clone(), vec![t.predicate.clone()]));
    }
    store
        .query(Some(&t.subject), None, Some(&t.object))
        .into_iter()
        .filter(|c| store.origin(c) == Some(Origin::Asserted))
        .find_map(|c| {
            let chain = schema.path(&c.predicate, &t.predicate)?;
            Some((c, chain))
        })
}

/// Bag-expanded IRI objects of `(root, p, ·)`, sorted and deduplicated. With
/// `use_inference`, `p` ranges over every sub-property of `property`.
pub fn related_resources(
    store: &TripleStore,
    schema: &PropertySchema,
    root: &Iri,
    property: &Iri,
    use_inference: bool,
) -> Result<Vec<Iri>, RdfError> {
    let properties = if use_inference {
        schema.sub_closure(property)
    } else {
        BTreeSet::from([property.clone()])
    };
    let subject = Subject::Iri(root.clone());
    let mut out = BTreeSet::new();
    for p in &properties {
        for object in store.objects(&subject, p) {
            let members = match object.as_subject() {
                Some(node) if store.is_bag(&node) => store.expand_members(&object)?,
                _ => vec![object],
            };
            out.extend(members.into_iter().filter_map(|m| match m {
                Term::Iri(i) => Some(i),
                _ => None,
            }));
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Iri {
        Iri::lb(s)
    }

    fn r(s: &str) -> Iri {
        Iri::new(format!("http://localhost/{s}")).unwrap()
    }

    #[test]
    fn cycles_refused() {
        let mut schema = PropertySchema::new();
        schema.add_super(p("a"), p("b")).unwrap();
        schema.add_super(p("b"), p("c")).unwrap();
        assert_eq!(schema.add_super(p("c"), p("a")).unwrap_err().code(), "SCHEMA_CYCLE");
        assert!(schema.add_super(p("a"), p("a")).is_err());
        assert_eq!(schema.edge_count(), 2);
    }

    #[test]
    fn chain_infers_both_levels() {
        let mut schema = PropertySchema::new();
        schema.add_super(p("p"), p("q")).unwrap();
        schema.add_super(p("q"), p("r")).unwrap();
        let mut store = TripleStore::new();
        store.insert(Triple::new(r("s"), p("p"), r("o")));
        let sat = saturate(&store, &schema);
        assert_eq!(sat.len(), 3);
        let inferred: Vec<_> = sat.inferred().map(|t| t.predicate.clone()).collect();
        assert_eq!(inferred, vec![p("q"), p("r")]);
        let (src, chain) = explain(&sat, &schema, &Triple::new(r("s"), p("r"), r("o"))).unwrap();
        assert_eq!(src.predicate, p("p"));
        assert_eq!(chain, vec![p("p"), p("q"), p("r")]);
    }

    #[test]
    fn empty_schema_is_identity() {
        let mut store = TripleStore::new();
        store.insert(Triple::new(r("s"), p("p"), r("o")));
        assert_eq!(saturate(&store, &PropertySchema::new()), store);
    }

    #[test]
    fn closures_are_reflexive() {
        let mut schema = PropertySchema::new();
        schema.add_super(p("composition"), p("semantique_metier")).unwrap();
        schema.add_super(p("aggregation"), p("semantique_metier")).unwrap();
        assert_eq!(schema.sub_closure(&p("semantique_metier")).len(), 3);
        assert_eq!(schema.super_closure(&p("composition")).len(), 2);
        assert_eq!(schema.super_closure(&p("x")), BTreeSet::from([p("x")]));
    }

    #[test]
    fn related_expands_plain_objects_too() {
        let mut store = TripleStore::new();
        store.insert(Triple::new(r("a"), p("association"), r("b")));
        let schema = PropertySchema::new();
        assert_eq!(
            related_resources(&store, &schema, &r("a"), &p("association"), false).unwrap(),
            vec![r("b")]
        );
        assert!(related_resources(&store, &schema, &r("b"), &p("association"), true)
            .unwrap()
            .is_empty());
    }
}
