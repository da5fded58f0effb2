//! Valid knowledge cards of every kind.

use chrono::NaiveDate;
use knowcard_core::model::*;
use proptest::prelude::*;

use crate::oracle::{logic, render};

/// Free text: markup characters, quotes, tabs, CR/LF and non-ASCII.
pub fn text() -> impl Strategy<Value = String> {
    "[A-Za-z0-9 <>&\"'\\t\\r\\n\u{e9}\u{df}\u{4e2d}\u{1f58a}\\]\\-]{0,24}"
}

/// Text with at least one visible character.
pub fn visible_text() -> impl Strategy<Value = String> {
    ("[A-Za-z\u{e9}]", text(), text()).prop_map(|(a, b, c)| format!("{b}{a}{c}"))
}

pub fn card_id() -> impl Strategy<Value = String> {
    "[A-Za-z_][A-Za-z0-9_-]{0,15}"
}

fn concept_stem() -> impl Strategy<Value = String> {
    "[A-Za-z_][A-Za-z0-9_]{0,8}"
}

pub fn kind() -> impl Strategy<Value = CardKind> {
    prop::sample::select(CardKind::all().collect::<Vec<_>>())
}

pub fn metadata() -> impl Strategy<Value = CardMetadata> {
    let language = prop::option::of(prop::sample::select(vec!["en", "fr", "fr-FR", "de-CH-1996"]));
    (
        visible_text(),
        visible_text(),
        (1990i32..2030, 1u32..13, 1u32..29),
        prop::option::of(text()),
        language,
    )
        .prop_map(|(title, creator, (y, m, d), description, language)| CardMetadata {
            title,
            creator,
            date: NaiveDate::from_ymd_opt(y, m, d).expect("day below 29"),
            description,
            language: language.map(str::to_string),
        })
}

pub fn lexicon() -> impl Strategy<Value = Vec<LexiconEntry>> {
    prop::collection::vec(("[a-zA-Z\u{e9} ]{1,10}", text()), 1..6).prop_map(|entries| {
        entries
            .into_iter()
            .enumerate()
            .map(|(n, (term, definition))| LexiconEntry::new(format!("{term} #{n}"), definition))
            .collect()
    })
}

/// Whole-part relations only point forward in declaration order, so they
/// never close a cycle.
pub fn concept_network() -> impl Strategy<Value = ConceptNetwork> {
    prop::collection::vec((concept_stem(), text()), 1..8).prop_flat_map(|stems| {
        let concepts: Vec<Concept> = stems
            .into_iter()
            .enumerate()
            .map(|(n, (stem, label))| Concept::new(format!("{stem}_{n}"), label))
            .collect();
        let count = concepts.len();
        let relation = (
            prop::sample::select(RelationKind::ALL.to_vec()),
            0..count,
            0..count,
            prop::option::of(text()),
        );
        let relations = prop::collection::vec(relation, 0..10);
        (Just(concepts), relations).prop_map(|(concepts, raw)| {
            let relations = raw
                .into_iter()
                .filter_map(|(kind, a, b, label)| {
                    let (from, to) = if kind.is_whole_part() {
                        if a == b {
                            return None;
                        }
                        (a.min(b), a.max(b))
                    } else {
                        (a, b)
                    };
                    Some(ConceptRelation {
                        kind,
                        from: concepts[from].id.clone(),
                        to: concepts[to].id.clone(),
                        label,
                    })
                })
                .collect();
            ConceptNetwork { concepts, relations }
        })
    })
}

pub fn statechart() -> impl Strategy<Value = StateChart> {
    prop::collection::vec(("[a-z][a-z0-9_ ]{0,8}", text()), 1..6).prop_flat_map(|raw| {
        let states: Vec<State> = raw
            .into_iter()
            .enumerate()
            .map(|(n, (id, label))| State {
                id: format!("{id}{n}"),
                label,
            })
            .collect();
        let count = states.len();
        let transitions = prop::collection::vec((0..count, 0..count, text()), 0..8);
        (Just(states), 0..count, transitions).prop_map(|(states, initial, raw)| {
            let transitions = raw
                .into_iter()
                .map(|(a, b, event)| Transition {
                    from: states[a].id.clone(),
                    to: states[b].id.clone(),
                    event,
                })
                .collect();
            StateChart {
                initial: states[initial].id.clone(),
                states,
                transitions,
            }
        })
    })
}

pub fn collaboration() -> impl Strategy<Value = Collaboration> {
    prop::collection::vec(("[A-Za-z][A-Za-z0-9:]{0,8}", text()), 1..5).prop_flat_map(|raw| {
        let objects: Vec<CollaborationObject> = raw
            .into_iter()
            .enumerate()
            .map(|(n, (id, label))| CollaborationObject {
                id: format!("{id}.{n}"),
                label,
            })
            .collect();
        let count = objects.len();
        let messages = prop::collection::vec((1u32..4, 0..count, 0..count, text()), 0..6);
        (Just(objects), messages).prop_map(|(objects, raw)| {
            let mut seq = 0;
            let messages = raw
                .into_iter()
                .map(|(step, a, b, label)| {
                    seq += step;
                    Message {
                        seq,
                        from: objects[a].id.clone(),
                        to: objects[b].id.clone(),
                        label,
                    }
                })
                .collect();
            Collaboration { objects, messages }
        })
    })
}

/// Constraint sources with assorted layout, including CRLF line breaks and
/// the `<`, `>`, `<>` operators that need escaping in XML.
pub fn constraint() -> impl Strategy<Value = ConstraintAttachment> {
    let layout = prop::sample::select(vec![" ", "\n  ", "\r\n\t", "  "]);
    ("[a-z_][a-z0-9_]{0,10}", logic(1), layout).prop_map(|(context, body, gap)| {
        let source = format!("context {context} inv :{gap}{}", render(&body));
        ConstraintAttachment::parse(source).expect("generated constraints parse")
    })
}

pub fn narrative() -> impl Strategy<Value = Narrative> {
    (text(), prop::collection::vec("(fig/[a-z]{1,8}\\.png|http://example\\.org/[a-z]{1,6})", 0..3))
        .prop_map(|(text, figure_refs)| Narrative { text, figure_refs })
}

/// A valid card of the given kind: required sections are present and
/// non-empty, other sections appear at random.
pub fn card_of(kind: CardKind) -> impl Strategy<Value = KnowledgeCard> {
    let required = required_sections(kind);
    let pick = move |s: SectionName| {
        if required.contains(&s) {
            Just(true).boxed()
        } else {
            prop::bool::weighted(0.25).boxed()
        }
    };
    (
        card_id(),
        metadata(),
        (pick(SectionName::Lexicon), lexicon()),
        (pick(SectionName::ConceptNetwork), concept_network()),
        (pick(SectionName::Statechart), statechart()),
        (pick(SectionName::Collaboration), collaboration()),
        (pick(SectionName::Constraints), prop::collection::vec(constraint(), 1..4)),
        (pick(SectionName::Narrative), narrative()),
    )
        .prop_map(move |(id, metadata, lex, net, chart, collab, cons, narr)| {
            let mut card = KnowledgeCard::new(id, kind, metadata);
            card.lexicon = lex.0.then_some(lex.1);
            card.concept_network = net.0.then_some(net.1);
            card.statechart = chart.0.then_some(chart.1);
            card.collaboration = collab.0.then_some(collab.1);
            card.constraints = cons.0.then_some(cons.1);
            card.narrative = narr.0.then_some(narr.1);
            card
        })
}

pub fn card() -> impl Strategy<Value = KnowledgeCard> {
    kind().prop_flat_map(card_of)
}

/// `per_kind` cards of each of the twelve kinds, from a fixed seed.
pub fn corpus(per_kind: usize) -> Vec<KnowledgeCard> {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;

    let mut runner = TestRunner::deterministic();
    let mut cards = Vec::new();
    for (k, kind) in CardKind::all().enumerate() {
        let strategy = card_of(kind);
        for n in 0..per_kind {
            let mut card = strategy
                .new_tree(&mut runner)
                .expect("card strategy never rejects")
                .current();
            card.id = format!("{}_{k}_{n}", card.id);
            cards.push(card);
        }
    }
    cards
}
