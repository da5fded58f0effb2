//! The RDF/XML subset used by the ontology and link documents.
//!
//! Accepted inside `rdf:RDF`:
//! - `rdf:Description` with `rdf:about` (or `rdf:nodeID`), holding property
//!   elements whose object is an `rdf:resource`, an `rdf:nodeID`, literal
//!   text with optional `xml:lang`, or a single `rdf:Bag` of `rdf:li
//!   rdf:resource` items;
//! - `rdf:Property` with `rdf:ID` (or `rdf:about`), holding
//!   `rdfs:subPropertyOf rdf:resource` and `rdfs:label` children.
//!
//! Everything else is refused with the path of the offending element.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use url::Url;

use super::schema::PropertySchema;
use super::store::TripleStore;
use super::term::{Iri, Literal, Namespaces, Subject, Term, Triple, RDFS_NS, RDF_NS};
use super::RdfError;
use crate::xml::{escape_attr, escape_text, is_xml_char, parse_document, Element, XML_NS};

/// What one document contributes.
#[derive(Debug, Clone, Default)]
pub struct RdfXmlDocument {
    pub triples: Vec<Triple>,
    pub schema: PropertySchema,
    /// Prefixes declared on the root element.
    pub namespaces: Vec<(String, String)>,
}

impl RdfXmlDocument {
    pub fn into_store(self) -> TripleStore {
        let mut store = TripleStore::new();
        for (p, ns) in &self.namespaces {
            store.namespaces.insert(p.clone(), ns.clone());
        }
        store.extend(self.triples);
        store
    }
}

/// Names in the rdf: namespace that may appear as predicates.
fn is_rdf_predicate(local: &str) -> bool {
    matches!(local, "type" | "value") || Iri::rdf(local).member_index().is_some()
}

struct Loader {
    base: Option<Url>,
    node_ids: HashMap<String, String>,
    next_blank: usize,
    doc: RdfXmlDocument,
}

fn unsupported(path: &str, message: impl Into<String>) -> RdfError {
    RdfError::UnsupportedRdfXml {
        path: path.to_string(),
        message: message.into(),
    }
}

fn child_paths<'e>(el: &'e Element, path: &str) -> Vec<(String, &'e Element)> {
    el.elements()
        .enumerate()
        .map(|(i, c)| (format!("{path}/{}[{}]", c.name.qualified(), i + 1), c))
        .collect()
}

fn is_rdf(el: &Element, local: &str) -> bool {
    el.name.is(Some(RDF_NS), local)
}

impl Loader {
    fn fresh_blank(&mut self) -> String {
        self.next_blank += 1;
        format!("b{}", self.next_blank)
    }

    fn node_id(&mut self, label: &str, path: &str) -> Result<String, RdfError> {
        if label.is_empty() {
            return Err(unsupported(path, "empty rdf:nodeID"));
        }
        if let Some(id) = self.node_ids.get(label) {
            return Ok(id.clone());
        }
        let id = self.fresh_blank();
        self.node_ids.insert(label.to_string(), id.clone());
        Ok(id)
    }

    fn resolve(&self, reference: &str, path: &str) -> Result<Iri, RdfError> {
        if Iri::is_absolute(reference) {
            return Iri::new(reference);
        }
        let base = self
            .base
            .as_ref()
            .ok_or_else(|| unsupported(path, format!("relative IRI '{reference}' without a base")))?;
        let joined = base
            .join(reference)
            .map_err(|e| unsupported(path, format!("cannot resolve '{reference}': {e}")))?;
        Iri::new(joined.as_str())
    }

    /// Checks the attribute set against the allowed `(namespace, local)` names.
    fn only_attrs(el: &Element, path: &str, allowed: &[(&str, &str)]) -> Result<(), RdfError> {
        for a in &el.attributes {
            let ok = allowed
                .iter()
                .any(|(ns, local)| a.name.is(Some(ns), local));
            if !ok {
                return Err(unsupported(path, format!("attribute '{}'", a.name.qualified())));
            }
        }
        Ok(())
    }

    fn no_content(el: &Element, path: &str) -> Result<(), RdfError> {
        if el.has_element_children() || el.has_significant_text() {
            return Err(unsupported(path, "element must be empty"));
        }
        Ok(())
    }

    fn load(&mut self, root: &Element) -> Result<(), RdfError> {
        if !is_rdf(root, "RDF") {
            return Err(unsupported(
                &format!("/{}", root.name.qualified()),
                "root element must be rdf:RDF",
            ));
        }
        let path = "/rdf:RDF";
        Self::only_attrs(root, path, &[(XML_NS, "base")])?;
        if let Some(base) = root.attr(Some(XML_NS), "base") {
            let url = Url::parse(base).map_err(|e| unsupported(path, format!("bad xml:base: {e}")))?;
            self.base = Some(url);
        }
        if root.has_significant_text() {
            return Err(unsupported(path, "text directly inside rdf:RDF"));
        }
        self.doc.namespaces = root.namespace_decls.clone();
        for (child_path, child) in child_paths(root, path) {
            if is_rdf(child, "Description") {
                self.description(child, &child_path)?;
            } else if is_rdf(child, "Property") {
                self.property(child, &child_path)?;
            } else {
                return Err(unsupported(&child_path, "only rdf:Description and rdf:Property are supported"));
            }
        }
        Ok(())
    }

    fn description(&mut self, el: &Element, path: &str) -> Result<(), RdfError> {
        Self::only_attrs(el, path, &[(RDF_NS, "about"), (RDF_NS, "nodeID")])?;
        let subject = match (el.attr(Some(RDF_NS), "about"), el.attr(Some(RDF_NS), "nodeID")) {
            (Some(about), None) => Subject::Iri(self.resolve(about, path)?),
            (None, Some(label)) => Subject::Blank(self.node_id(label, path)?),
            _ => return Err(unsupported(path, "rdf:Description needs exactly one of rdf:about, rdf:nodeID")),
        };
        if el.has_significant_text() {
            return Err(unsupported(path, "text inside rdf:Description"));
        }
        for (prop_path, prop) in child_paths(el, path) {
            let Some(ns) = prop.name.namespace.as_deref() else {
                return Err(unsupported(&prop_path, "property element without a namespace"));
            };
            if ns == RDF_NS && !is_rdf_predicate(&prop.name.local) {
                return Err(unsupported(&prop_path, format!("rdf:{} is outside the subset", prop.name.local)));
            }
            let predicate = Iri::new(format!("{ns}{}", prop.name.local))?;
            let object = self.property_object(prop, &prop_path)?;
            self.doc.triples.push(Triple {
                subject: subject.clone(),
                predicate,
                object,
            });
        }
        Ok(())
    }

    fn property_object(&mut self, el: &Element, path: &str) -> Result<Term, RdfError> {
        Self::only_attrs(el, path, &[(RDF_NS, "resource"), (RDF_NS, "nodeID"), (XML_NS, "lang")])?;
        let resource = el.attr(Some(RDF_NS), "resource");
        let node_id = el.attr(Some(RDF_NS), "nodeID");
        let lang = el.attr(Some(XML_NS), "lang");
        match (resource, node_id) {
            (Some(_), Some(_)) => Err(unsupported(path, "both rdf:resource and rdf:nodeID")),
            (Some(r), None) => {
                Self::no_content(el, path)?;
                if lang.is_some() {
                    return Err(unsupported(path, "xml:lang on a resource reference"));
                }
                Ok(Term::Iri(self.resolve(r, path)?))
            }
            (None, Some(label)) => {
                Self::no_content(el, path)?;
                if lang.is_some() {
                    return Err(unsupported(path, "xml:lang on a node reference"));
                }
                Ok(Term::Blank(self.node_id(label, path)?))
            }
            (None, None) if el.has_element_children() => {
                if lang.is_some() || el.has_significant_text() {
                    return Err(unsupported(path, "mixed content"));
                }
                let children = child_paths(el, path);
                match children.as_slice() {
                    [(bag_path, bag)] if is_rdf(bag, "Bag") => self.bag(bag, bag_path),
                    [(p, c)] => Err(unsupported(p, format!("<{}> is outside the subset", c.name.qualified()))),
                    _ => Err(unsupported(path, "a property element holds at most one rdf:Bag")),
                }
            }
            (None, None) => Ok(Term::Literal(Literal {
                lexical: el.text(),
                lang: lang.map(str::to_string),
            })),
        }
    }

    fn bag(&mut self, el: &Element, path: &str) -> Result<Term, RdfError> {
        Self::only_attrs(el, path, &[])?;
        if el.has_significant_text() {
            return Err(unsupported(path, "text inside rdf:Bag"));
        }
        let node = self.fresh_blank();
        let subject = Subject::Blank(node.clone());
        self.doc
            .triples
            .push(Triple::new(subject.clone(), Iri::rdf("type"), Iri::rdf("Bag")));
        for (n, (li_path, li)) in child_paths(el, path).into_iter().enumerate() {
            if !is_rdf(li, "li") {
                return Err(unsupported(&li_path, "rdf:Bag may only contain rdf:li"));
            }
            Self::only_attrs(li, &li_path, &[(RDF_NS, "resource")])?;
            Self::no_content(li, &li_path)?;
            let resource = li
                .attr(Some(RDF_NS), "resource")
                .ok_or_else(|| unsupported(&li_path, "rdf:li needs rdf:resource"))?;
            let member = self.resolve(resource, &li_path)?;
            self.doc
                .triples
                .push(Triple::new(subject.clone(), Iri::member(n + 1), member));
        }
        Ok(Term::Blank(node))
    }

    fn property(&mut self, el: &Element, path: &str) -> Result<(), RdfError> {
        Self::only_attrs(el, path, &[(RDF_NS, "ID"), (RDF_NS, "about")])?;
        let property = match (el.attr(Some(RDF_NS), "ID"), el.attr(Some(RDF_NS), "about")) {
            (Some(id), None) => self.resolve(&format!("#{id}"), path)?,
            (None, Some(about)) => self.resolve(about, path)?,
            _ => return Err(unsupported(path, "rdf:Property needs exactly one of rdf:ID, rdf:about")),
        };
        if el.has_significant_text() {
            return Err(unsupported(path, "text inside rdf:Property"));
        }
        self.doc.schema.declare(property.clone());
        for (child_path, child) in child_paths(el, path) {
            if child.name.is(Some(RDFS_NS), "subPropertyOf") {
                Self::only_attrs(child, &child_path, &[(RDF_NS, "resource")])?;
                Self::no_content(child, &child_path)?;
                let sup = child
                    .attr(Some(RDF_NS), "resource")
                    .ok_or_else(|| unsupported(&child_path, "rdfs:subPropertyOf needs rdf:resource"))?;
                let sup = self.resolve(sup, &child_path)?;
                self.doc.schema.add_super(property.clone(), sup)?;
            } else if child.name.is(Some(RDFS_NS), "label") {
                Self::only_attrs(child, &child_path, &[(XML_NS, "lang")])?;
                if child.has_element_children() {
                    return Err(unsupported(&child_path, "rdfs:label must hold text"));
                }
                let lang = child.attr(Some(XML_NS), "lang").map(str::to_string);
                self.doc.schema.add_label(property.clone(), child.text(), lang);
            } else {
                return Err(unsupported(
                    &child_path,
                    "rdf:Property may only contain rdfs:subPropertyOf and rdfs:label",
                ));
            }
        }
        Ok(())
    }
}

pub fn load_rdfxml(document: &str) -> Result<RdfXmlDocument, RdfError> {
    load_rdfxml_with_base(document, None)
}

/// Like [`load_rdfxml`], resolving relative references against `base` unless
/// the root carries its own `xml:base`.
pub fn load_rdfxml_with_base(document: &str, base: Option<&str>) -> Result<RdfXmlDocument, RdfError> {
    let root = parse_document(document).map_err(|e| RdfError::MalformedXml {
        offset: e.offset,
        message: e.message,
    })?;
    let base = base
        .map(|b| Url::parse(b).map_err(|e| unsupported("/", format!("bad base IRI: {e}"))))
        .transpose()?;
    let mut loader = Loader {
        base,
        node_ids: HashMap::new(),
        next_blank: 0,
        doc: RdfXmlDocument::default(),
    };
    loader.load(&root)?;
    Ok(loader.doc)
}

// ------------------------------------------------------------- serializing

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.')
}

/// Splits a predicate IRI into namespace and an XML local name.
fn split_predicate(iri: &Iri) -> Option<(&str, &str)> {
    let s = iri.as_str();
    let tail_start = s
        .char_indices()
        .rev()
        .take_while(|(_, c)| is_name_char(*c))
        .last()
        .map(|(i, _)| i)?;
    let local_start = s[tail_start..].find(is_name_start)? + tail_start;
    let (ns, local) = s.split_at(local_start);
    (!ns.is_empty()).then_some((ns, local))
}

struct Writer<'a> {
    store: &'a TripleStore,
    prefixes: BTreeMap<String, String>,
    labels: BTreeMap<String, String>,
    inline_bags: BTreeSet<String>,
    out: String,
}

fn unserializable(message: impl Into<String>) -> RdfError {
    RdfError::Unserializable {
        message: message.into(),
    }
}

fn checked(text: &str) -> Result<&str, RdfError> {
    match text.chars().find(|c| !is_xml_char(*c)) {
        Some(c) => Err(unserializable(format!("U+{:04X} cannot be written as XML", c as u32))),
        None => Ok(text),
    }
}

impl Writer<'_> {
    fn label(&mut self, blank: &str) -> String {
        let n = self.labels.len() + 1;
        self.labels
            .entry(blank.to_string())
            .or_insert_with(|| format!("b{n}"))
            .clone()
    }

    fn qname(&self, predicate: &Iri) -> Result<String, RdfError> {
        let (ns, local) = split_predicate(predicate)
            .ok_or_else(|| unserializable(format!("predicate {predicate} has no XML local name")))?;
        if ns == RDF_NS && !is_rdf_predicate(local) {
            return Err(unserializable(format!("rdf:{local} cannot be a property element")));
        }
        let prefix = self
            .prefixes
            .iter()
            .find(|(_, v)| v.as_str() == ns)
            .map(|(k, _)| k)
            .expect("namespace registered before writing");
        Ok(format!("{prefix}:{local}"))
    }

    /// Blank nodes that read back as an inline `rdf:Bag`: typed Bag, members
    /// `_1.._n` all IRIs, no other statements, referenced exactly once.
    fn find_inline_bags(&mut self) {
        let mut references: BTreeMap<&str, usize> = BTreeMap::new();
        for t in self.store.triples() {
            if let Term::Blank(b) = &t.object {
                *references.entry(b).or_default() += 1;
            }
        }
        for (blank, count) in references {
            if count != 1 {
                continue;
            }
            let node = Subject::Blank(blank.to_string());
            let own = self.store.query(Some(&node), None, None);
            let typed = own
                .iter()
                .any(|t| t.predicate == Iri::rdf("type") && t.object == Term::Iri(Iri::rdf("Bag")));
            let mut indexes = Vec::new();
            let members_ok = own.iter().all(|t| {
                if t.predicate == Iri::rdf("type") && t.object == Term::Iri(Iri::rdf("Bag")) {
                    return true;
                }
                match (t.predicate.member_index(), &t.object) {
                    (Some(n), Term::Iri(_)) => {
                        indexes.push(n);
                        true
                    }
                    _ => false,
                }
            });
            indexes.sort_unstable();
            let contiguous = indexes.iter().enumerate().all(|(i, n)| *n == i + 1);
            let self_ref = !self
                .store
                .query(Some(&node), None, Some(&Term::Blank(blank.to_string())))
                .is_empty();
            if typed && members_ok && contiguous && !self_ref {
                self.inline_bags.insert(blank.to_string());
            }
        }
    }

    fn write_property(&mut self, t: &Triple) -> Result<(), RdfError> {
        let name = self.qname(&t.predicate)?;
        match &t.object {
            Term::Iri(i) => {
                let _ = writeln!(self.out, "    <{name} rdf:resource=\"{}\"/>", escape_attr(checked(i.as_str())?));
            }
            Term::Literal(l) => {
                let text = escape_text(checked(&l.lexical)?);
                match &l.lang {
                    Some(lang) => {
                        let _ = writeln!(
                            self.out,
                            "    <{name} xml:lang=\"{}\">{text}</{name}>",
                            escape_attr(checked(lang)?)
                        );
                    }
                    None => {
                        let _ = writeln!(self.out, "    <{name}>{text}</{name}>");
                    }
                }
            }
            Term::Blank(b) if self.inline_bags.contains(b) => {
                let node = Subject::Blank(b.clone());
                let mut members: Vec<(usize, Iri)> = self
                    .store
                    .query(Some(&node), None, None)
                    .into_iter()
                    .filter_map(|m| Some((m.predicate.member_index()?, m.object.as_iri()?.clone())))
                    .collect();
                members.sort();
                let _ = writeln!(self.out, "    <{name}>");
                if members.is_empty() {
                    let _ = writeln!(self.out, "      <rdf:Bag/>");
                } else {
                    let _ = writeln!(self.out, "      <rdf:Bag>");
                    for (_, m) in members {
                        let _ = writeln!(
                            self.out,
                            "        <rdf:li rdf:resource=\"{}\"/>",
                            escape_attr(checked(m.as_str())?)
                        );
                    }
                    let _ = writeln!(self.out, "      </rdf:Bag>");
                }
                let _ = writeln!(self.out, "    </{name}>");
            }
            Term::Blank(b) => {
                let label = self.label(b);
                let _ = writeln!(self.out, "    <{name} rdf:nodeID=\"{label}\"/>");
            }
        }
        Ok(())
    }
}

/// Writes `schema` as `rdf:Property` elements and every triple of `store`
/// as `rdf:Description` elements. Loading the result gives back the same
/// triples up to blank node labels.
///
/// Fails for predicates without an XML local name and for text containing
/// characters XML cannot carry.
pub fn serialize_rdfxml(store: &TripleStore, schema: &PropertySchema) -> Result<String, RdfError> {
    let mut prefixes: BTreeMap<String, String> = Namespaces::default()
        .iter()
        .chain(store.namespaces.iter())
        .filter(|(p, _)| !p.is_empty() && p.chars().all(is_name_char) && p.starts_with(is_name_start))
        .filter(|(p, _)| !p.to_ascii_lowercase().starts_with("xml"))
        .map(|(p, n)| (p.to_string(), n.to_string()))
        .collect();
    let mut generated = 0;
    for t in store.triples() {
        let (ns, _) = split_predicate(&t.predicate)
            .ok_or_else(|| unserializable(format!("predicate {} has no XML local name", t.predicate)))?;
        if !prefixes.values().any(|v| v == ns) {
            while prefixes.contains_key(&format!("ns{generated}")) {
                generated += 1;
            }
            prefixes.insert(format!("ns{generated}"), ns.to_string());
        }
    }

    let mut w = Writer {
        store,
        prefixes,
        labels: BTreeMap::new(),
        inline_bags: BTreeSet::new(),
        out: String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<rdf:RDF"),
    };
    w.find_inline_bags();
    let decls: Vec<String> = w
        .prefixes
        .iter()
        .map(|(p, ns)| format!("\n    xmlns:{p}=\"{}\"", escape_attr(ns)))
        .collect();
    for d in decls {
        w.out.push_str(&d);
    }

    if schema.is_empty() && store.is_empty() {
        w.out.push_str("/>\n");
        return Ok(w.out);
    }
    w.out.push_str(">\n");

    for (property, def) in schema.iter() {
        let _ = writeln!(w.out, "  <rdf:Property rdf:about=\"{}\">", escape_attr(checked(property.as_str())?));
        for sup in &def.super_properties {
            let _ = writeln!(w.out, "    <rdfs:subPropertyOf rdf:resource=\"{}\"/>", escape_attr(checked(sup.as_str())?));
        }
        for label in &def.labels {
            let text = escape_text(checked(&label.text)?);
            match &label.lang {
                Some(lang) => {
                    let _ = writeln!(w.out, "    <rdfs:label xml:lang=\"{}\">{text}</rdfs:label>", escape_attr(checked(lang)?));
                }
                None => {
                    let _ = writeln!(w.out, "    <rdfs:label>{text}</rdfs:label>");
                }
            }
        }
        let _ = writeln!(w.out, "  </rdf:Property>");
    }

    let mut current: Option<&Subject> = None;
    for t in store.triples() {
        if let Subject::Blank(b) = &t.subject {
            if w.inline_bags.contains(b) {
                continue;
            }
        }
        if current != Some(&t.subject) {
            if current.is_some() {
                let _ = writeln!(w.out, "  </rdf:Description>");
            }
            match &t.subject {
                Subject::Iri(i) => {
                    let _ = writeln!(w.out, "  <rdf:Description rdf:about=\"{}\">", escape_attr(checked(i.as_str())?));
                }
                Subject::Blank(b) => {
                    let label = w.label(b);
                    let _ = writeln!(w.out, "  <rdf:Description rdf:nodeID=\"{label}\">");
                }
            }
            current = Some(&t.subject);
        }
        w.write_property(t)?;
    }
    if current.is_some() {
        let _ = writeln!(w.out, "  </rdf:Description>");
    }
    w.out.push_str("</rdf:RDF>\n");
    Ok(w.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_split() {
        assert_eq!(
            split_predicate(&Iri::lb("semantique_metier")),
            Some(("http://localhost/rdfs/lbn-v1.2#", "semantique_metier"))
        );
        assert_eq!(split_predicate(&Iri::member(12)), Some((RDF_NS, "_12")));
        assert_eq!(
            split_predicate(&Iri::new("http://x/a/1p").unwrap()),
            Some(("http://x/a/1", "p"))
        );
        assert_eq!(split_predicate(&Iri::new("http://x/a/123").unwrap()), None);
    }

    #[test]
    fn empty_store_has_only_root() {
        let xml = serialize_rdfxml(&TripleStore::new(), &PropertySchema::new()).unwrap();
        assert!(xml.contains("<rdf:RDF"));
        assert!(xml.contains("xmlns:lb=\"http://localhost/rdfs/lbn-v1.2#\""));
        assert!(xml.trim_end().ends_with("/>"));
        let doc = load_rdfxml(&xml).unwrap();
        assert!(doc.triples.is_empty());
        assert!(doc.schema.is_empty());
    }

    #[test]
    fn literal_language_survives() {
        let mut store = TripleStore::new();
        store.insert(Triple::new(
            Iri::new("http://localhost/Cap").unwrap(),
            Iri::rdfs("label"),
            Literal::tagged("capuchon <fr> & co", "fr"),
        ));
        let xml = serialize_rdfxml(&store, &PropertySchema::new()).unwrap();
        assert!(xml.contains("xml:lang=\"fr\""), "{xml}");
        let back = load_rdfxml(&xml).unwrap().into_store();
        assert_eq!(back.triple_set(), store.triple_set());
    }

    #[test]
    fn seq_is_refused() {
        let doc = r#"<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#" xmlns:lb="http://localhost/rdfs/lbn-v1.2#">
  <rdf:Description rdf:about="http://localhost/Cap">
    <lb:composition><rdf:Seq><rdf:li rdf:resource="http://localhost/clip"/></rdf:Seq></lb:composition>
  </rdf:Description>
</rdf:RDF>"#;
        match load_rdfxml(doc).unwrap_err() {
            RdfError::UnsupportedRdfXml { path, .. } => {
                assert_eq!(path, "/rdf:RDF/rdf:Description[1]/lb:composition[1]/rdf:Seq[1]")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn relative_ids_resolve_against_base() {
        let doc = r##"<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
    xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#" xml:base="http://localhost/rdfs/lbn-v1.2">
  <rdf:Property rdf:ID="composition">
    <rdfs:subPropertyOf rdf:resource="#semantique_metier"/>
  </rdf:Property>
</rdf:RDF>"##;
        let schema = load_rdfxml(doc).unwrap().schema;
        let def = schema.get(&Iri::lb("composition")).unwrap();
        assert!(def.super_properties.contains(&Iri::lb("semantique_metier")));
        let no_base = doc.replace(" xml:base=\"http://localhost/rdfs/lbn-v1.2\"", "");
        assert_eq!(load_rdfxml(&no_base).unwrap_err().code(), "UNSUPPORTED_RDFXML");
        assert_eq!(
            load_rdfxml_with_base(&no_base, Some("http://localhost/rdfs/lbn-v1.2"))
                .unwrap()
                .schema,
            schema
        );
    }

    #[test]
    fn malformed_xml_reported() {
        assert_eq!(load_rdfxml("<rdf:RDF").unwrap_err().code(), "MALFORMED_XML");
    }

    #[test]
    fn shared_blank_nodes_use_node_ids() {
        let mut store = TripleStore::new();
        let a = Iri::new("http://localhost/a").unwrap();
        let c = Iri::new("http://localhost/c").unwrap();
        store.insert(Triple::new(a.clone(), Iri::lb("p"), Term::Blank("x".into())));
        store.insert(Triple::new(c, Iri::lb("p"), Term::Blank("x".into())));
        store.insert(Triple::new(Subject::Blank("x".into()), Iri::lb("q"), Literal::plain("v")));
        let xml = serialize_rdfxml(&store, &PropertySchema::new()).unwrap();
        assert!(xml.contains("rdf:nodeID"), "{xml}");
        let back = load_rdfxml(&xml).unwrap().into_store();
        assert_eq!(back.len(), 3);
        assert_eq!(back.blank_nodes().len(), 1);
    }

    #[test]
    fn unnameable_predicate_is_an_error() {
        let mut store = TripleStore::new();
        store.insert(Triple::new(
            Iri::new("http://localhost/a").unwrap(),
            Iri::new("http://localhost/42").unwrap(),
            Literal::plain("x"),
        ));
        assert_eq!(
            serialize_rdfxml(&store, &PropertySchema::new()).unwrap_err().code(),
            "UNSERIALIZABLE"
        );
    }
}
