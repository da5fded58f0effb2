use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Culture,
    Process,
    Appraise,
    Vocabulary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subtype {
    History,
    Geography,
    Physic,
    Strategy,
    Tactic,
    Diary,
    Payment,
    Use,
    Freedom,
    Semantics,
    Syntax,
    Lexicon,
}

impl Domain {
    pub const ALL: [Domain; 4] = [
        Domain::Culture,
        Domain::Process,
        Domain::Appraise,
        Domain::Vocabulary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Domain::Culture => "culture",
            Domain::Process => "process",
            Domain::Appraise => "appraise",
            Domain::Vocabulary => "vocabulary",
        }
    }

    pub fn subtypes(self) -> [Subtype; 3] {
        use Subtype::*;
        match self {
            Domain::Culture => [History, Geography, Physic],
            Domain::Process => [Strategy, Tactic, Diary],
            Domain::Appraise => [Payment, Use, Freedom],
            Domain::Vocabulary => [Semantics, Syntax, Lexicon],
        }
    }
}

impl Subtype {
    pub fn name(self) -> &'static str {
        match self {
            Subtype::History => "history",
            Subtype::Geography => "geography",
            Subtype::Physic => "physic",
            Subtype::Strategy => "strategy",
            Subtype::Tactic => "tactic",
            Subtype::Diary => "diary",
            Subtype::Payment => "payment",
            Subtype::Use => "use",
            Subtype::Freedom => "freedom",
            Subtype::Semantics => "semantics",
            Subtype::Syntax => "syntax",
            Subtype::Lexicon => "lexicon",
        }
    }
}

impl FromStr for Domain {
    type Err = KindError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Domain::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| KindError::UnknownDomain(s.to_string()))
    }
}

impl FromStr for Subtype {
    type Err = KindError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Domain::ALL
            .into_iter()
            .flat_map(Domain::subtypes)
            .find(|t| t.name() == s)
            .ok_or_else(|| KindError::UnknownSubtype(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KindError {
    #[error("unknown knowledge domain '{0}'")]
    UnknownDomain(String),
    #[error("unknown knowledge subtype '{0}'")]
    UnknownSubtype(String),
    #[error("subtype '{subtype}' does not belong to domain '{domain}'")]
    Mismatch { domain: String, subtype: String },
    #[error("card kind must be written 'domain.subtype', found '{0}'")]
    Malformed(String),
}

/// One cell of the knowledge typology: a domain and one of its three subtypes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CardKind {
    domain: Domain,
    subtype: Subtype,
}

impl CardKind {
    pub fn new(domain: Domain, subtype: Subtype) -> Result<Self, KindError> {
        if domain.subtypes().contains(&subtype) {
            Ok(CardKind { domain, subtype })
        } else {
            Err(KindError::Mismatch {
                domain: domain.name().into(),
                subtype: subtype.name().into(),
            })
        }
    }

    /// All twelve valid kinds, grouped by domain.
    pub fn all() -> impl Iterator<Item = CardKind> {
        Domain::ALL
            .into_iter()
            .flat_map(|d| d.subtypes().map(move |subtype| CardKind { domain: d, subtype }))
    }

    pub fn domain(self) -> Domain {
        self.domain
    }

    pub fn subtype(self) -> Subtype {
        self.subtype
    }

    pub fn is_vocabulary(self) -> bool {
        self.domain == Domain::Vocabulary
    }
}

impl fmt::Display for CardKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.domain.name(), self.subtype.name())
    }
}

impl FromStr for CardKind {
    type Err = KindError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (domain, subtype) = s
            .split_once('.')
            .ok_or_else(|| KindError::Malformed(s.to_string()))?;
        CardKind::new(domain.parse()?, subtype.parse()?)
    }
}

impl Serialize for CardKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CardKind {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Card sections, in canonical document order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SectionName {
    Lexicon,
    ConceptNetwork,
    Statechart,
    Collaboration,
    Constraints,
    Narrative,
}

impl SectionName {
    pub const ALL: [SectionName; 6] = [
        SectionName::Lexicon,
        SectionName::ConceptNetwork,
        SectionName::Statechart,
        SectionName::Collaboration,
        SectionName::Constraints,
        SectionName::Narrative,
    ];

    /// Element name in card XML, also the repository directory name.
    pub fn as_str(self) -> &'static str {
        match self {
            SectionName::Lexicon => "lexicon",
            SectionName::ConceptNetwork => "concept-network",
            SectionName::Statechart => "statechart",
            SectionName::Collaboration => "collaboration",
            SectionName::Constraints => "constraints",
            SectionName::Narrative => "narrative",
        }
    }
}

impl fmt::Display for SectionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SectionName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SectionName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown section '{s}'"))
    }
}

/// Sections a card of `kind` must carry, following the formalism column of
/// the typology (two formalisms joined by "and" means both are required).
pub fn required_sections(kind: CardKind) -> BTreeSet<SectionName> {
    use SectionName as S;
    let names: &[SectionName] = match kind.subtype {
        Subtype::History => &[S::Narrative],
        Subtype::Geography => &[S::ConceptNetwork],
        Subtype::Physic => &[S::Statechart, S::Collaboration],
        Subtype::Strategy => &[S::Collaboration],
        Subtype::Tactic => &[S::Statechart],
        Subtype::Diary => &[S::ConceptNetwork, S::Statechart],
        Subtype::Payment | Subtype::Use => &[S::Constraints, S::Narrative],
        Subtype::Freedom => &[S::Narrative],
        Subtype::Semantics | Subtype::Syntax => &[S::ConceptNetwork],
        Subtype::Lexicon => &[S::Lexicon],
    };
    names.iter().copied().collect()
}

/// String-level entry point: parses `domain` and `subtype` and checks the pair.
pub fn required_sections_for(domain: &str, subtype: &str) -> Result<BTreeSet<SectionName>, KindError> {
    let kind = CardKind::new(domain.parse()?, subtype.parse()?)?;
    Ok(required_sections(kind))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(s: &str) -> CardKind {
        s.parse().unwrap()
    }

    #[test]
    fn twelve_kinds_round_trip_through_text() {
        let all: Vec<_> = CardKind::all().collect();
        assert_eq!(all.len(), 12);
        for k in all {
            assert_eq!(k.to_string().parse::<CardKind>().unwrap(), k);
        }
    }

    #[test]
    fn physic_needs_both_dynamic_diagrams() {
        assert_eq!(
            required_sections(kind("culture.physic")),
            [SectionName::Statechart, SectionName::Collaboration].into()
        );
    }

    #[test]
    fn lexicon_needs_dictionary() {
        assert_eq!(
            required_sections(kind("vocabulary.lexicon")),
            [SectionName::Lexicon].into()
        );
    }

    #[test]
    fn payment_needs_constraints_and_text() {
        assert_eq!(
            required_sections(kind("appraise.payment")),
            [SectionName::Constraints, SectionName::Narrative].into()
        );
    }

    #[test]
    fn every_kind_requires_something() {
        assert!(CardKind::all().all(|k| !required_sections(k).is_empty()));
    }

    #[test]
    fn mismatched_pair_is_kind_error() {
        assert!(matches!(
            required_sections_for("culture", "lexicon"),
            Err(KindError::Mismatch { .. })
        ));
        assert!(matches!(
            "vocabulary.dictionary".parse::<CardKind>(),
            Err(KindError::UnknownSubtype(_))
        ));
        assert!(matches!("vocabulary".parse::<CardKind>(), Err(KindError::Malformed(_))));
        assert!(required_sections_for("process", "diary").is_ok());
    }
}
