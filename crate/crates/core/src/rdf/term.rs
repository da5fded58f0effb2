use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::RdfError;

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const DC_NS: &str = "http://purl.org/DC/";
pub const LB_NS: &str = "http://localhost/rdfs/lbn-v1.2#";

/// An absolute IRI. Comparison is by text.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(Arc<str>);

fn scheme_len(s: &str) -> Option<usize> {
    let colon = s.find(':')?;
    let scheme = &s[..colon];
    let mut chars = scheme.chars();
    let first_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
    let rest_ok = chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'));
    (first_ok && rest_ok).then_some(colon)
}

impl Iri {
    pub fn new(text: impl Into<String>) -> Result<Iri, RdfError> {
        let text = text.into();
        if scheme_len(&text).is_none() {
            return Err(RdfError::BadIri {
                iri: text,
                reason: "no scheme".into(),
            });
        }
        if let Some(c) = text.chars().find(|c| c.is_whitespace() || matches!(c, '<' | '>' | '"')) {
            return Err(RdfError::BadIri {
                iri: text,
                reason: format!("contains {c:?}"),
            });
        }
        Ok(Iri(text.into()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_absolute(text: &str) -> bool {
        scheme_len(text).is_some()
    }

    pub fn rdf(local: &str) -> Iri {
        Iri(format!("{RDF_NS}{local}").into())
    }

    pub fn rdfs(local: &str) -> Iri {
        Iri(format!("{RDFS_NS}{local}").into())
    }

    pub fn dc(local: &str) -> Iri {
        Iri(format!("{DC_NS}{local}").into())
    }

    pub fn lb(local: &str) -> Iri {
        Iri(format!("{LB_NS}{local}").into())
    }

    /// `rdf:_n`.
    pub fn member(n: usize) -> Iri {
        Iri(format!("{RDF_NS}_{n}").into())
    }

    /// `n` when this is a container membership property `rdf:_n`.
    pub fn member_index(&self) -> Option<usize> {
        let digits = self.0.strip_prefix(RDF_NS)?.strip_prefix('_')?;
        if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse().ok()
    }

    /// The text after the last `#` or `/`.
    pub fn local_name(&self) -> &str {
        self.0.rsplit(['#', '/']).next().unwrap_or(&self.0)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub lexical: String,
    pub lang: Option<String>,
}

impl Literal {
    pub fn plain(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            lang: None,
        }
    }

    pub fn tagged(lexical: impl Into<String>, lang: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            lang: Some(lang.into()),
        }
    }
}

/// Subject position: IRIs order before blank nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    Iri(Iri),
    Blank(String),
}

/// Object position: IRIs, then literals, then blank nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    Literal(Literal),
    Blank(String),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_subject(&self) -> Option<Subject> {
        match self {
            Term::Iri(i) => Some(Subject::Iri(i.clone())),
            Term::Blank(b) => Some(Subject::Blank(b.clone())),
            Term::Literal(_) => None,
        }
    }
}

impl From<Iri> for Term {
    fn from(i: Iri) -> Self {
        Term::Iri(i)
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Literal(l)
    }
}

impl From<Subject> for Term {
    fn from(s: Subject) -> Self {
        match s {
            Subject::Iri(i) => Term::Iri(i),
            Subject::Blank(b) => Term::Blank(b),
        }
    }
}

impl From<Iri> for Subject {
    fn from(i: Iri) -> Self {
        Subject::Iri(i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Subject,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: impl Into<Subject>, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple {
            subject: subject.into(),
            predicate,
            object: object.into(),
        }
    }

    /// Builds a triple from arbitrary terms, rejecting ill-placed ones.
    pub fn from_terms(subject: Term, predicate: Term, object: Term) -> Result<Self, RdfError> {
        let subject = subject.as_subject().ok_or(RdfError::BadTriple {
            reason: "subject cannot be a literal",
        })?;
        let predicate = match predicate {
            Term::Iri(i) => i,
            Term::Literal(_) => {
                return Err(RdfError::BadTriple {
                    reason: "predicate cannot be a literal",
                })
            }
            Term::Blank(_) => {
                return Err(RdfError::BadTriple {
                    reason: "predicate cannot be a blank node",
                })
            }
        };
        Ok(Triple {
            subject,
            predicate,
            object,
        })
    }
}

/// Prefix to namespace IRI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Namespaces {
    map: BTreeMap<String, String>,
}

impl Default for Namespaces {
    fn default() -> Self {
        let mut map = BTreeMap::new();
        map.insert("rdf".into(), RDF_NS.into());
        map.insert("rdfs".into(), RDFS_NS.into());
        map.insert("dc".into(), DC_NS.into());
        map.insert("lb".into(), LB_NS.into());
        Namespaces { map }
    }
}

impl Namespaces {
    pub fn empty() -> Self {
        Namespaces { map: BTreeMap::new() }
    }

    pub fn insert(&mut self, prefix: impl Into<String>, iri: impl Into<String>) {
        self.map.insert(prefix.into(), iri.into());
    }

    pub fn get(&self, prefix: &str) -> Option<&str> {
        self.map.get(prefix).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    /// Resolves `prefix:local` through the map, or accepts an absolute IRI.
    pub fn resolve(&self, text: &str) -> Result<Iri, RdfError> {
        if let Some((prefix, local)) = text.split_once(':') {
            if let Some(ns) = self.map.get(prefix) {
                return Iri::new(format!("{ns}{local}"));
            }
        }
        Iri::new(text)
    }

    /// Shortest `prefix:local` form, if any namespace matches.
    pub fn compact(&self, iri: &Iri) -> Option<String> {
        self.map
            .iter()
            .filter_map(|(p, ns)| iri.as_str().strip_prefix(ns.as_str()).map(|l| (p, l)))
            .min_by_key(|(_, l)| l.len())
            .map(|(p, l)| format!("{p}:{l}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_needs_scheme() {
        assert!(Iri::new("http://localhost/Cap").is_ok());
        assert!(Iri::new("urn:x").is_ok());
        assert!(Iri::new("Cap").is_err());
        assert!(Iri::new("1http://x").is_err());
        assert!(Iri::new("http://a b").is_err());
    }

    #[test]
    fn prefixes_resolve() {
        let ns = Namespaces::default();
        assert_eq!(
            ns.resolve("lb:composition").unwrap().as_str(),
            "http://localhost/rdfs/lbn-v1.2#composition"
        );
        assert_eq!(ns.resolve("http://localhost/Cap").unwrap().as_str(), "http://localhost/Cap");
        assert_eq!(ns.compact(&Iri::dc("title")).as_deref(), Some("dc:title"));
        assert!(ns.resolve("zz:x").is_ok(), "unknown prefix reads as a scheme");
    }

    #[test]
    fn membership_index() {
        assert_eq!(Iri::member(3).member_index(), Some(3));
        assert_eq!(Iri::rdf("_0").member_index(), None);
        assert_eq!(Iri::rdf("_01").member_index(), None);
        assert_eq!(Iri::rdf("type").member_index(), None);
    }

    #[test]
    fn literal_predicate_rejected() {
        let s = Term::Iri(Iri::new("http://localhost/Cap").unwrap());
        let err = Triple::from_terms(s.clone(), Literal::plain("p").into(), s.clone()).unwrap_err();
        assert_eq!(err.code(), "BAD_TRIPLE");
        assert!(Triple::from_terms(s.clone(), Iri::lb("composition").into(), s).is_ok());
    }
}
