use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use knowcard_core::model::{build_lead_protection_fixture, KnowledgeCard};
use knowcard_core::store::{CardStore, StoreError, StoreOptions};
use knowcard_testkit::cards;
use proptest::prelude::*;

fn open(dir: &std::path::Path) -> CardStore {
    CardStore::open(
        dir,
        StoreOptions {
            create: true,
            ..StoreOptions::default()
        },
    )
    .unwrap()
}

#[derive(Debug, Clone)]
enum Step {
    Put(usize, Box<KnowledgeCard>),
    Delete(usize),
    Reopen,
}

fn steps() -> impl Strategy<Value = Vec<Step>> {
    let step = prop_oneof![
        5 => (0usize..6, cards::card()).prop_map(|(slot, c)| Step::Put(slot, Box::new(c))),
        2 => (0usize..6).prop_map(Step::Delete),
        1 => Just(Step::Reopen),
    ];
    prop::collection::vec(step, 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn store_behaves_like_a_map(steps in steps()) {
        let dir = tempfile::tempdir().unwrap();
        let mut store = open(dir.path());
        let mut model: BTreeMap<String, KnowledgeCard> = BTreeMap::new();
        for step in steps {
            match step {
                Step::Put(slot, mut card) => {
                    card.id = format!("slot{slot}");
                    match store.put_card(&card, true) {
                        Ok(id) => {
                            prop_assert_eq!(&id, &card.id);
                            model.insert(card.id.clone(), *card);
                        }
                        Err(StoreError::Redefinition(c)) => {
                            prop_assert!(store.mapping().unwrap().defining(&c.concept).is_some());
                        }
                        Err(e) => prop_assert!(false, "put failed: {e}"),
                    }
                }
                Step::Delete(slot) => {
                    let id = format!("slot{slot}");
                    let result = store.delete_card(&id);
                    prop_assert_eq!(result.is_ok(), model.remove(&id).is_some());
                }
                Step::Reopen => {
                    drop(store);
                    store = open(dir.path());
                }
            }
            let ids: Vec<String> = store.list_cards(None).unwrap().into_iter().map(|s| s.id).collect();
            prop_assert_eq!(ids, model.keys().cloned().collect::<Vec<_>>());
            for (id, card) in &model {
                prop_assert_eq!(&store.get_card(id).unwrap(), card);
            }
            prop_assert!(store.check_consistency().unwrap());
        }
    }
}

#[test]
fn readers_never_see_half_a_card() {
    let dir = tempfile::tempdir().unwrap();
    let store = Arc::new(open(dir.path()));
    let versions: Vec<KnowledgeCard> = (0..8)
        .map(|n| {
            let mut card = build_lead_protection_fixture();
            card.metadata.title = format!("revision {n}");
            if n % 2 == 1 {
                card.narrative = Some(knowcard_core::model::Narrative {
                    text: format!("revision {n} notes"),
                    figure_refs: vec![],
                });
            }
            card
        })
        .collect();
    store.put_card(&versions[0], false).unwrap();

    let stop = Arc::new(AtomicBool::new(false));
    let readers: Vec<_> = (0..3)
        .map(|_| {
            let store = store.clone();
            let stop = stop.clone();
            let versions = versions.clone();
            std::thread::spawn(move || {
                let mut reads = 0;
                while !stop.load(Ordering::SeqCst) {
                    let card = store.get_card("lead_protection").unwrap();
                    assert!(versions.contains(&card), "torn read: {card:?}");
                    reads += 1;
                }
                reads
            })
        })
        .collect();
    for round in 0..5 {
        for v in &versions {
            store.put_card(v, true).unwrap();
        }
        assert!(store.check_consistency().unwrap(), "round {round}");
    }
    stop.store(true, Ordering::SeqCst);
    for r in readers {
        assert!(r.join().unwrap() > 0);
    }
}
