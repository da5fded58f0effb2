use knowcard_core::cardxml::{parse_card, serialize_card, validate_against_schema};
use knowcard_core::model::{required_sections, validate_card, CardKind, KnowledgeCard};
use knowcard_core::report::Code;
use knowcard_testkit::cards;
use proptest::prelude::*;

fn round_trip(card: &KnowledgeCard) -> Result<(), String> {
    let xml = serialize_card(card).map_err(|e| format!("{}: {}", card.id, e.report()))?;
    let back = parse_card(&xml).map_err(|e| format!("{}: {}\n{xml}", card.id, e.report()))?;
    if &back != card {
        return Err(format!("{} changed in transit:\n{xml}", card.id));
    }
    let again = serialize_card(&back).unwrap();
    if again != xml {
        return Err(format!("{} serializes differently the second time", card.id));
    }
    Ok(())
}

#[test]
fn corpus_of_240_cards_round_trips() {
    let corpus = cards::corpus(20);
    assert_eq!(corpus.len(), 240);
    for kind in CardKind::all() {
        assert_eq!(corpus.iter().filter(|c| c.kind == kind).count(), 20);
    }
    for card in &corpus {
        round_trip(card).unwrap();
        assert!(validate_against_schema(&serialize_card(card).unwrap()).is_empty());
    }
}

#[test]
fn deleting_a_required_section_gives_exactly_one_missing_section() {
    let mut mutants = 0;
    for card in cards::corpus(5) {
        for section in required_sections(card.kind) {
            let mut mutant = card.clone();
            mutant.clear_section(section);
            let report = validate_card(&mutant);
            assert_eq!(report.codes(), vec![Code::MissingSection], "{} without {section}", card.id);
            assert_eq!(report.issues[0].path, format!("/knowledge-card/{section}"));
            assert!(serialize_card(&mutant).is_err());
            mutants += 1;
        }
    }
    assert!(mutants >= 60);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn any_generated_card_round_trips(card in cards::card()) {
        let outcome = round_trip(&card);
        prop_assert!(outcome.is_ok(), "{}", outcome.unwrap_err());
    }
}
