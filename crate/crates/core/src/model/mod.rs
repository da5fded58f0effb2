//! Knowledge cards: the typed unit of design knowledge and its validation rules.

mod fixture;
mod kind;
mod validate;

pub use fixture::{
    build_ink_leak_fixture, build_interior_diameter_fixture, build_lead_protection_fixture,
    build_pen_lexicon_fixture, pen_corpus, INTERIOR_DIAMETER_CONSTRAINT,
};
pub use kind::{
    required_sections, required_sections_for, CardKind, Domain, KindError, SectionName, Subtype,
};
pub use validate::{is_card_id, is_concept_id, validate_card};

use std::fmt;
use std::str::FromStr;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::ocl::{parse_constraint, ConstraintDef, OclError};

/// Dublin Core style description of a card.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CardMetadata {
    pub title: String,
    pub creator: String,
    pub date: NaiveDate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Concept {
    pub id: String,
    pub label: String,
}

impl Concept {
    pub fn new(id: impl Into<String>, label: impl Into<String>) -> Self {
        Concept {
            id: id.into(),
            label: label.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    /// Strong whole-part relation.
    Composition,
    /// Weak grouping.
    Aggregation,
    Association,
    Specialization,
}

impl RelationKind {
    pub const ALL: [RelationKind; 4] = [
        RelationKind::Composition,
        RelationKind::Aggregation,
        RelationKind::Association,
        RelationKind::Specialization,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::Composition => "composition",
            RelationKind::Aggregation => "aggregation",
            RelationKind::Association => "association",
            RelationKind::Specialization => "specialization",
        }
    }

    /// Whole-part relations, which must be acyclic and irreflexive.
    pub fn is_whole_part(self) -> bool {
        matches!(self, RelationKind::Composition | RelationKind::Aggregation)
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RelationKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown relation kind '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptRelation {
    pub kind: RelationKind,
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ConceptRelation {
    pub fn new(kind: RelationKind, from: impl Into<String>, to: impl Into<String>) -> Self {
        ConceptRelation {
            kind,
            from: from.into(),
            to: to.into(),
            label: None,
        }
    }
}

/// Class-diagram content: concepts and typed relations between them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptNetwork {
    pub concepts: Vec<Concept>,
    pub relations: Vec<ConceptRelation>,
}

impl ConceptNetwork {
    pub fn concept(&self, id: &str) -> Option<&Concept> {
        self.concepts.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct State {
    pub id: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transition {
    pub from: String,
    pub to: String,
    pub event: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateChart {
    pub states: Vec<State>,
    pub initial: String,
    pub transitions: Vec<Transition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollaborationObject {
    pub id: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Message {
    pub seq: u32,
    pub from: String,
    pub to: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collaboration {
    pub objects: Vec<CollaborationObject>,
    pub messages: Vec<Message>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub term: String,
    pub definition: String,
}

impl LexiconEntry {
    pub fn new(term: impl Into<String>, definition: impl Into<String>) -> Self {
        LexiconEntry {
            term: term.into(),
            definition: definition.into(),
        }
    }
}

/// Constraint source text together with its parse. Only constructible from
/// text that parses, so the two can never disagree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ConstraintAttachment {
    source_text: String,
    parsed: ConstraintDef,
}

impl ConstraintAttachment {
    pub fn parse(source_text: impl Into<String>) -> Result<Self, OclError> {
        let source_text = source_text.into();
        let parsed = parse_constraint(&source_text)?;
        Ok(ConstraintAttachment {
            source_text,
            parsed,
        })
    }

    pub fn source_text(&self) -> &str {
        &self.source_text
    }

    pub fn parsed(&self) -> &ConstraintDef {
        &self.parsed
    }
}

impl TryFrom<String> for ConstraintAttachment {
    type Error = OclError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        ConstraintAttachment::parse(value)
    }
}

impl From<ConstraintAttachment> for String {
    fn from(value: ConstraintAttachment) -> Self {
        value.source_text
    }
}

/// Free text plus opaque figure references (relative paths or IRIs).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Narrative {
    pub text: String,
    #[serde(default)]
    pub figure_refs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnowledgeCard {
    pub id: String,
    pub kind: CardKind,
    pub metadata: CardMetadata,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lexicon: Option<Vec<LexiconEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub concept_network: Option<ConceptNetwork>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub statechart: Option<StateChart>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub collaboration: Option<Collaboration>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraints: Option<Vec<ConstraintAttachment>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub narrative: Option<Narrative>,
}

impl KnowledgeCard {
    /// A card with metadata and no sections.
    pub fn new(id: impl Into<String>, kind: CardKind, metadata: CardMetadata) -> Self {
        KnowledgeCard {
            id: id.into(),
            kind,
            metadata,
            lexicon: None,
            concept_network: None,
            statechart: None,
            collaboration: None,
            constraints: None,
            narrative: None,
        }
    }

    /// Whether the section is present with at least one item.
    pub fn has_section(&self, section: SectionName) -> bool {
        match section {
            SectionName::Lexicon => self.lexicon.as_ref().is_some_and(|l| !l.is_empty()),
            SectionName::ConceptNetwork => self
                .concept_network
                .as_ref()
                .is_some_and(|n| !n.concepts.is_empty()),
            SectionName::Statechart => self.statechart.as_ref().is_some_and(|s| !s.states.is_empty()),
            SectionName::Collaboration => self
                .collaboration
                .as_ref()
                .is_some_and(|c| !c.objects.is_empty()),
            SectionName::Constraints => self.constraints.as_ref().is_some_and(|c| !c.is_empty()),
            SectionName::Narrative => self.narrative.is_some(),
        }
    }

    /// Whether the section field is set at all, possibly empty.
    pub fn section_is_set(&self, section: SectionName) -> bool {
        match section {
            SectionName::Lexicon => self.lexicon.is_some(),
            SectionName::ConceptNetwork => self.concept_network.is_some(),
            SectionName::Statechart => self.statechart.is_some(),
            SectionName::Collaboration => self.collaboration.is_some(),
            SectionName::Constraints => self.constraints.is_some(),
            SectionName::Narrative => self.narrative.is_some(),
        }
    }

    pub fn sections(&self) -> Vec<SectionName> {
        SectionName::ALL
            .into_iter()
            .filter(|s| self.section_is_set(*s))
            .collect()
    }

    pub fn clear_section(&mut self, section: SectionName) {
        match section {
            SectionName::Lexicon => self.lexicon = None,
            SectionName::ConceptNetwork => self.concept_network = None,
            SectionName::Statechart => self.statechart = None,
            SectionName::Collaboration => self.collaboration = None,
            SectionName::Constraints => self.constraints = None,
            SectionName::Narrative => self.narrative = None,
        }
    }
}
