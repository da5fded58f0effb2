//! Machine-readable validation findings shared by the model and the card codec.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Stable finding codes. The string form (`as_str`) is part of the wire
/// format of the HTTP service and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Code {
    // model level
    BadCardId,
    EmptyTitle,
    EmptyCreator,
    BadLanguage,
    MissingSection,
    EmptySection,
    BadConceptId,
    DuplicateConcept,
    DanglingRelation,
    SelfRelation,
    CycleInComposition,
    EmptyStateId,
    DuplicateState,
    MissingInitial,
    DanglingTransition,
    EmptyObjectId,
    DuplicateObject,
    DanglingMessage,
    BadSeq,
    NonIncreasingSeq,
    EmptyTerm,
    DuplicateTerm,
    // document level
    MalformedXml,
    UnknownElement,
    UnknownAttribute,
    MissingElement,
    MissingAttribute,
    DuplicateElement,
    DuplicateAttribute,
    UnexpectedText,
    BadKind,
    BadVersion,
    BadDate,
    BadRelationKind,
    DuplicateSection,
    ConstraintParseError,
    IllegalCharacter,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::BadCardId => "BAD_CARD_ID",
            Code::EmptyTitle => "EMPTY_TITLE",
            Code::EmptyCreator => "EMPTY_CREATOR",
            Code::BadLanguage => "BAD_LANGUAGE",
            Code::MissingSection => "MISSING_SECTION",
            Code::EmptySection => "EMPTY_SECTION",
            Code::BadConceptId => "BAD_CONCEPT_ID",
            Code::DuplicateConcept => "DUPLICATE_CONCEPT",
            Code::DanglingRelation => "DANGLING_RELATION",
            Code::SelfRelation => "SELF_RELATION",
            Code::CycleInComposition => "CYCLE_IN_COMPOSITION",
            Code::EmptyStateId => "EMPTY_STATE_ID",
            Code::DuplicateState => "DUPLICATE_STATE",
            Code::MissingInitial => "MISSING_INITIAL",
            Code::DanglingTransition => "DANGLING_TRANSITION",
            Code::EmptyObjectId => "EMPTY_OBJECT_ID",
            Code::DuplicateObject => "DUPLICATE_OBJECT",
            Code::DanglingMessage => "DANGLING_MESSAGE",
            Code::BadSeq => "BAD_SEQ",
            Code::NonIncreasingSeq => "NON_INCREASING_SEQ",
            Code::EmptyTerm => "EMPTY_TERM",
            Code::DuplicateTerm => "DUPLICATE_TERM",
            Code::MalformedXml => "MALFORMED_XML",
            Code::UnknownElement => "UNKNOWN_ELEMENT",
            Code::UnknownAttribute => "UNKNOWN_ATTRIBUTE",
            Code::MissingElement => "MISSING_ELEMENT",
            Code::MissingAttribute => "MISSING_ATTRIBUTE",
            Code::DuplicateElement => "DUPLICATE_ELEMENT",
            Code::DuplicateAttribute => "DUPLICATE_ATTRIBUTE",
            Code::UnexpectedText => "UNEXPECTED_TEXT",
            Code::BadKind => "BAD_KIND",
            Code::BadVersion => "BAD_VERSION",
            Code::BadDate => "BAD_DATE",
            Code::BadRelationKind => "BAD_RELATION_KIND",
            Code::DuplicateSection => "DUPLICATE_SECTION",
            Code::ConstraintParseError => "CONSTRAINT_PARSE_ERROR",
            Code::IllegalCharacter => "ILLEGAL_CHARACTER",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One violated rule, located by a slash-separated path into the card
/// (`/knowledge-card/concept-network/relation[2]`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Issue {
    pub code: Code,
    pub path: String,
    pub message: String,
    /// Character offset, for findings that point into text (XML or constraint source).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
}

impl Issue {
    pub fn new(code: Code, path: impl Into<String>, message: impl Into<String>) -> Self {
        Issue {
            code,
            path: path.into(),
            message: message.into(),
            offset: None,
        }
    }

    pub fn at_offset(mut self, offset: usize) -> Self {
        self.offset = Some(offset);
        self
    }
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code, self.path, self.message)?;
        if let Some(offset) = self.offset {
            write!(f, " (offset {offset})")?;
        }
        Ok(())
    }
}

/// An ordered list of findings; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub issues: Vec<Issue>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, issue: Issue) {
        self.issues.push(issue);
    }

    pub fn is_empty(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn len(&self) -> usize {
        self.issues.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Issue> {
        self.issues.iter()
    }

    pub fn count(&self, code: Code) -> usize {
        self.issues.iter().filter(|i| i.code == code).count()
    }

    pub fn has(&self, code: Code) -> bool {
        self.count(code) > 0
    }

    pub fn codes(&self) -> Vec<Code> {
        self.issues.iter().map(|i| i.code).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, issue) in self.issues.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

impl From<Vec<Issue>> for Report {
    fn from(issues: Vec<Issue>) -> Self {
        Report { issues }
    }
}

impl<'a> IntoIterator for &'a Report {
    type Item = &'a Issue;
    type IntoIter = std::slice::Iter<'a, Issue>;

    fn into_iter(self) -> Self::IntoIter {
        self.issues.iter()
    }
}
