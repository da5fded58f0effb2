//! The pen-design corpus: the lead protection network and companion cards.
//! Resource spellings (`mecanism`, `Closer`, `clip`) are kept as published.

use chrono::NaiveDate;

use super::*;

pub const INTERIOR_DIAMETER_CONSTRAINT: &str = "context interior_diameter inv :\n  \
interior_diameter = external_tip_diameter + 2 * (cone_length * SIN(cone_angle))";

fn metadata(title: &str, description: &str) -> CardMetadata {
    CardMetadata {
        title: title.into(),
        creator: "CYGMA knowledge book".into(),
        date: NaiveDate::from_ymd_opt(2004, 3, 15).expect("valid date"),
        description: Some(description.into()),
        language: Some("en".into()),
    }
}

fn kind(s: &str) -> CardKind {
    s.parse().expect("fixture kind")
}

/// Vocabulary card for the lead protection sub-assembly: a mechanism and a
/// cap aggregated under the protection, the cap composed of closer and clip.
pub fn build_lead_protection_fixture() -> KnowledgeCard {
    let mut card = KnowledgeCard::new(
        "lead_protection",
        kind("vocabulary.semantics"),
        metadata(
            "Lead_protection network",
            "Elements that compose a lead protection",
        ),
    );
    let concepts = ["Lead_protection", "mecanism", "Cap", "Closer", "clip"]
        .into_iter()
        .map(|id| Concept::new(id, id))
        .collect();
    let relations = vec![
        ConceptRelation::new(RelationKind::Aggregation, "Lead_protection", "mecanism"),
        ConceptRelation::new(RelationKind::Aggregation, "Lead_protection", "Cap"),
        ConceptRelation::new(RelationKind::Composition, "Cap", "Closer"),
        ConceptRelation::new(RelationKind::Composition, "Cap", "clip"),
    ];
    card.concept_network = Some(ConceptNetwork { concepts, relations });
    card
}

/// Physical phenomenon card: the ink leak effect seen as pen states and as
/// an exchange between parts.
pub fn build_ink_leak_fixture() -> KnowledgeCard {
    let mut card = KnowledgeCard::new(
        "ink_leak_effect",
        kind("culture.physic"),
        metadata("Ink leak effect", "Why ink leaks from a capped pen"),
    );
    let state = |id: &str, label: &str| State {
        id: id.into(),
        label: label.into(),
    };
    let transition = |from: &str, to: &str, event: &str| Transition {
        from: from.into(),
        to: to.into(),
        event: event.into(),
    };
    card.statechart = Some(StateChart {
        states: vec![
            state("capped", "Pen capped"),
            state("uncapped", "Pen uncapped"),
            state("pressurised", "Air pressure rises in the cap"),
            state("leaking", "Ink pushed out of the tip"),
        ],
        initial: "capped".into(),
        transitions: vec![
            transition("capped", "uncapped", "remove cap"),
            transition("uncapped", "pressurised", "put cap back quickly"),
            transition("pressurised", "leaking", "pressure exceeds capillary hold"),
            transition("leaking", "capped", "pressure equalised"),
        ],
    });
    let object = |id: &str, label: &str| CollaborationObject {
        id: id.into(),
        label: label.into(),
    };
    let message = |seq: u32, from: &str, to: &str, label: &str| Message {
        seq,
        from: from.into(),
        to: to.into(),
        label: label.into(),
    };
    card.collaboration = Some(Collaboration {
        objects: vec![
            object("user", "User"),
            object("cap", "Cap"),
            object("air", "Trapped air"),
            object("tip", "Tip"),
        ],
        messages: vec![
            message(1, "user", "cap", "push on"),
            message(2, "cap", "air", "compress"),
            message(3, "air", "tip", "push ink"),
            message(4, "tip", "user", "stain"),
        ],
    });
    card
}

/// Design rule card carrying the interior diameter invariant.
pub fn build_interior_diameter_fixture() -> KnowledgeCard {
    let mut card = KnowledgeCard::new(
        "interior_diameter",
        kind("appraise.payment"),
        metadata("Interior diameter rule", "Cone geometry of the writing tip"),
    );
    card.constraints = Some(vec![
        ConstraintAttachment::parse(INTERIOR_DIAMETER_CONSTRAINT).expect("fixture constraint")
    ]);
    card.narrative = Some(Narrative {
        text: "The interior diameter follows from the tip diameter and the cone geometry."
            .into(),
        figure_refs: vec!["figures/tip_cone.png".into()],
    });
    card
}

pub fn build_pen_lexicon_fixture() -> KnowledgeCard {
    let mut card = KnowledgeCard::new(
        "pen_lexicon",
        kind("vocabulary.lexicon"),
        metadata("Pen lexicon", "Terms of the advertising pen"),
    );
    card.lexicon = Some(vec![
        LexiconEntry::new("Cap", "removable lead protection part"),
        LexiconEntry::new("Clip", "part of the cap holding the pen in a pocket"),
        LexiconEntry::new("Closer", "part of the cap sealing the tip"),
    ]);
    card
}

pub fn pen_corpus() -> Vec<KnowledgeCard> {
    vec![
        build_lead_protection_fixture(),
        build_ink_leak_fixture(),
        build_interior_diameter_fixture(),
        build_pen_lexicon_fixture(),
    ]
}
