use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{required_sections, KnowledgeCard, SectionName};
use crate::report::{Code, Issue, Report};

const ROOT: &str = "/knowledge-card";

/// `[A-Za-z_][A-Za-z0-9_-]*`
pub fn is_card_id(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// `[A-Za-z_][A-Za-z0-9_]*`
pub fn is_concept_id(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_language_tag(s: &str) -> bool {
    let mut parts = s.split('-');
    let primary = parts.next().unwrap_or("");
    (1..=8).contains(&primary.len())
        && primary.chars().all(|c| c.is_ascii_alphabetic())
        && parts.all(|p| (1..=8).contains(&p.len()) && p.chars().all(|c| c.is_ascii_alphanumeric()))
}

/// Checks every card invariant, returning one issue per violation.
/// Never fails: an empty report means the card is valid.
pub fn validate_card(card: &KnowledgeCard) -> Report {
    let mut report = Report::new();

    if !is_card_id(&card.id) {
        report.push(Issue::new(
            Code::BadCardId,
            format!("{ROOT}/@id"),
            format!("card id '{}' must match [A-Za-z_][A-Za-z0-9_-]*", card.id),
        ));
    }

    let meta = &card.metadata;
    if meta.title.trim().is_empty() {
        report.push(Issue::new(Code::EmptyTitle, format!("{ROOT}/metadata/title"), "title is empty"));
    }
    if meta.creator.trim().is_empty() {
        report.push(Issue::new(
            Code::EmptyCreator,
            format!("{ROOT}/metadata/creator"),
            "creator is empty",
        ));
    }
    if let Some(lang) = &meta.language {
        if !is_language_tag(lang) {
            report.push(Issue::new(
                Code::BadLanguage,
                format!("{ROOT}/metadata/language"),
                format!("'{lang}' is not a language tag"),
            ));
        }
    }

    let required = required_sections(card.kind);
    for section in SectionName::ALL {
        let path = format!("{ROOT}/{section}");
        if required.contains(&section) {
            if !card.has_section(section) {
                report.push(Issue::new(
                    Code::MissingSection,
                    path,
                    format!("a {} card requires a non-empty {section} section", card.kind),
                ));
            }
        } else if card.section_is_set(section) && !card.has_section(section) {
            report.push(Issue::new(Code::EmptySection, path, format!("{section} section is empty")));
        }
    }

    if let Some(network) = &card.concept_network {
        check_network(network, &mut report);
    }
    if let Some(chart) = &card.statechart {
        check_statechart(chart, &mut report);
    }
    if let Some(collab) = &card.collaboration {
        check_collaboration(collab, &mut report);
    }
    if let Some(entries) = &card.lexicon {
        let mut seen = HashSet::new();
        for (n, entry) in entries.iter().enumerate() {
            let path = format!("{ROOT}/lexicon/entry[{}]", n + 1);
            if entry.term.trim().is_empty() {
                report.push(Issue::new(Code::EmptyTerm, path, "lexicon term is empty"));
            } else if !seen.insert(entry.term.to_lowercase()) {
                report.push(Issue::new(
                    Code::DuplicateTerm,
                    path,
                    format!("term '{}' already defined on this card", entry.term),
                ));
            }
        }
    }
    report
}

fn check_network(network: &super::ConceptNetwork, report: &mut Report) {
    let base = format!("{ROOT}/concept-network");
    let mut ids = HashSet::new();
    for (n, concept) in network.concepts.iter().enumerate() {
        let path = format!("{base}/concept[{}]", n + 1);
        if !is_concept_id(&concept.id) {
            report.push(Issue::new(
                Code::BadConceptId,
                path,
                format!("concept id '{}' must match [A-Za-z_][A-Za-z0-9_]*", concept.id),
            ));
        } else if !ids.insert(concept.id.as_str()) {
            report.push(Issue::new(
                Code::DuplicateConcept,
                path,
                format!("concept '{}' declared twice", concept.id),
            ));
        }
    }

    let mut edges: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (n, rel) in network.relations.iter().enumerate() {
        let path = format!("{base}/relation[{}]", n + 1);
        let missing: Vec<&str> = [rel.from.as_str(), rel.to.as_str()]
            .into_iter()
            .filter(|id| !ids.contains(id))
            .collect();
        if !missing.is_empty() {
            report.push(Issue::new(
                Code::DanglingRelation,
                path,
                format!("{} relation references undeclared concept(s) {}", rel.kind, missing.join(", ")),
            ));
            continue;
        }
        if rel.kind.is_whole_part() {
            if rel.from == rel.to {
                report.push(Issue::new(
                    Code::SelfRelation,
                    path,
                    format!("{} relation from '{}' to itself", rel.kind, rel.from),
                ));
            } else {
                edges.entry(&rel.from).or_default().push(&rel.to);
            }
        }
    }

    if let Some(cycle_at) = find_cycle(&edges) {
        report.push(Issue::new(
            Code::CycleInComposition,
            base,
            format!("composition/aggregation relations form a cycle through '{cycle_at}'"),
        ));
    }
}

// Iterative three-colour DFS; returns a node on some cycle.
fn find_cycle<'a>(edges: &BTreeMap<&'a str, Vec<&'a str>>) -> Option<&'a str> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Active,
        Done,
    }
    let mut marks: BTreeMap<&str, Mark> = BTreeMap::new();
    for &start in edges.keys() {
        if marks.contains_key(start) {
            continue;
        }
        let mut stack: Vec<(&str, usize)> = vec![(start, 0)];
        marks.insert(start, Mark::Active);
        while let Some((node, next)) = stack.last_mut() {
            let succ = edges.get(*node).map(Vec::as_slice).unwrap_or(&[]);
            if let Some(&child) = succ.get(*next) {
                *next += 1;
                match marks.get(child) {
                    Some(Mark::Active) => return Some(child),
                    Some(Mark::Done) => {}
                    None => {
                        marks.insert(child, Mark::Active);
                        stack.push((child, 0));
                    }
                }
            } else {
                marks.insert(node, Mark::Done);
                stack.pop();
            }
        }
    }
    None
}

fn check_statechart(chart: &super::StateChart, report: &mut Report) {
    let base = format!("{ROOT}/statechart");
    let mut ids = BTreeSet::new();
    for (n, state) in chart.states.iter().enumerate() {
        let path = format!("{base}/state[{}]", n + 1);
        if state.id.is_empty() {
            report.push(Issue::new(Code::EmptyStateId, path, "state id is empty"));
        } else if !ids.insert(state.id.as_str()) {
            report.push(Issue::new(
                Code::DuplicateState,
                path,
                format!("state '{}' declared twice", state.id),
            ));
        }
    }
    if !ids.contains(chart.initial.as_str()) {
        report.push(Issue::new(
            Code::MissingInitial,
            format!("{base}/initial"),
            format!("initial state '{}' is not declared", chart.initial),
        ));
    }
    for (n, t) in chart.transitions.iter().enumerate() {
        if !ids.contains(t.from.as_str()) || !ids.contains(t.to.as_str()) {
            report.push(Issue::new(
                Code::DanglingTransition,
                format!("{base}/transition[{}]", n + 1),
                format!("transition '{}' -> '{}' references an undeclared state", t.from, t.to),
            ));
        }
    }
}

fn check_collaboration(collab: &super::Collaboration, report: &mut Report) {
    let base = format!("{ROOT}/collaboration");
    let mut ids = BTreeSet::new();
    for (n, obj) in collab.objects.iter().enumerate() {
        let path = format!("{base}/object[{}]", n + 1);
        if obj.id.is_empty() {
            report.push(Issue::new(Code::EmptyObjectId, path, "object id is empty"));
        } else if !ids.insert(obj.id.as_str()) {
            report.push(Issue::new(
                Code::DuplicateObject,
                path,
                format!("object '{}' declared twice", obj.id),
            ));
        }
    }
    let mut previous: Option<u32> = None;
    for (n, msg) in collab.messages.iter().enumerate() {
        let path = format!("{base}/message[{}]", n + 1);
        if !ids.contains(msg.from.as_str()) || !ids.contains(msg.to.as_str()) {
            report.push(Issue::new(
                Code::DanglingMessage,
                path.clone(),
                format!("message {} references an undeclared object", msg.seq),
            ));
        }
        if msg.seq == 0 {
            report.push(Issue::new(Code::BadSeq, path, "message sequence numbers start at 1"));
        } else if previous.is_some_and(|p| msg.seq <= p) {
            report.push(Issue::new(
                Code::NonIncreasingSeq,
                path,
                format!("sequence number {} does not follow {}", msg.seq, previous.unwrap_or(0)),
            ));
        }
        previous = Some(msg.seq);
    }
}
