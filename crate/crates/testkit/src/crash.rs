//! Fault injection against the card store: every durable step of a write is
//! interrupted in turn, and what readers see afterwards is compared with the
//! states before and after the write.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use knowcard_core::model::{
    build_ink_leak_fixture, build_interior_diameter_fixture, build_lead_protection_fixture, build_pen_lexicon_fixture,
    KnowledgeCard,
    Narrative,
};
use knowcard_core::rdf::Triple;
use knowcard_core::store::{CardStore, CardSummary, FaultAction, StoreOptions};

#[derive(Debug, Clone)]
pub enum Write {
    Put(KnowledgeCard),
    Overwrite(KnowledgeCard),
    Delete(String),
}

impl Write {
    fn target(&self) -> &str {
        match self {
            Write::Put(c) | Write::Overwrite(c) => &c.id,
            Write::Delete(id) => id,
        }
    }

    fn apply(&self, store: &CardStore) -> bool {
        match self {
            Write::Put(c) => store.put_card(c, false).is_ok(),
            Write::Overwrite(c) => store.put_card(c, true).is_ok(),
            Write::Delete(id) => store.delete_card(id).is_ok(),
        }
    }
}

pub struct Scenario {
    pub name: &'static str,
    pub baseline: Vec<KnowledgeCard>,
    pub write: Write,
}

/// What a reader can observe through the public API.
#[derive(Debug, Clone, PartialEq)]
pub struct Observed {
    pub target: Option<KnowledgeCard>,
    pub listing: Vec<CardSummary>,
    pub rdf: BTreeSet<Triple>,
}

pub fn observe(store: &CardStore, id: &str) -> Observed {
    Observed {
        target: store.get_card(id).ok(),
        listing: store.list_cards(None).expect("listing"),
        rdf: store.rdf_snapshot().expect("snapshot").triple_set(),
    }
}

fn open(dir: &Path) -> CardStore {
    CardStore::open(
        dir,
        StoreOptions {
            create: true,
            ..StoreOptions::default()
        },
    )
    .expect("store opens")
}

fn seeded(dir: &Path, baseline: &[KnowledgeCard]) -> CardStore {
    let store = open(dir);
    for card in baseline {
        store.put_card(card, false).expect("baseline card");
    }
    store
}

fn leftovers(dir: &Path) -> Vec<String> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d).into_iter().flatten().flatten() {
            let path = entry.path();
            let name = entry.file_name().to_string_lossy().into_owned();
            if path.is_dir() {
                stack.push(path);
            } else if name.ends_with(".tmp") || name.starts_with("intent") {
                out.push(path.display().to_string());
            }
        }
    }
    out
}

#[derive(Debug, Default)]
pub struct Outcome {
    /// Injected faults, crash and failure modes counted separately.
    pub points: usize,
    pub crash_points: usize,
    pub failures: Vec<String>,
}

/// Interrupts the scenario's write at every step, once by crashing (the
/// store is dropped and reopened) and once by failing the step in place.
pub fn run(scenario: &Scenario, outcome: &mut Outcome) {
    let id = scenario.write.target().to_string();
    let (before, after, steps) = {
        let dir = tempfile::tempdir().expect("tempdir");
        let store = seeded(dir.path(), &scenario.baseline);
        let before = observe(&store, &id);
        let count = Arc::new(AtomicUsize::new(0));
        let seen = count.clone();
        store.set_fault_hook(Some(Box::new(move |_, _| {
            seen.fetch_add(1, Ordering::SeqCst);
            FaultAction::Proceed
        })));
        assert!(scenario.write.apply(&store), "{}: clean write fails", scenario.name);
        (before, observe(&store, &id), count.load(Ordering::SeqCst))
    };
    if before == after {
        outcome.failures.push(format!("{}: write changes nothing", scenario.name));
    }

    for step in 0..steps {
        for action in [FaultAction::Crash, FaultAction::Fail] {
            let dir = tempfile::tempdir().expect("tempdir");
            let store = seeded(dir.path(), &scenario.baseline);
            let calls = AtomicUsize::new(0);
            store.set_fault_hook(Some(Box::new(move |_, _| {
                if calls.fetch_add(1, Ordering::SeqCst) == step {
                    action
                } else {
                    FaultAction::Proceed
                }
            })));
            let reported_ok = scenario.write.apply(&store);
            let label = format!("{} step {step} {action:?}", scenario.name);

            if action == FaultAction::Fail {
                let seen = observe(&store, &id);
                if seen != before && seen != after {
                    outcome.failures.push(format!("{label}: live store shows a partial write"));
                }
                if reported_ok != (seen == after) {
                    outcome.failures.push(format!("{label}: result disagrees with the visible state"));
                }
            } else {
                outcome.crash_points += 1;
            }
            drop(store);

            let reopened = open(dir.path());
            let seen = observe(&reopened, &id);
            if seen != before && seen != after {
                outcome.failures.push(format!("{label}: reopened store shows a partial write"));
            }
            if !reopened.check_consistency().unwrap_or(false) {
                outcome.failures.push(format!("{label}: links disagree with records"));
            }
            let stray = leftovers(dir.path());
            if !stray.is_empty() {
                outcome.failures.push(format!("{label}: leftovers {stray:?}"));
            }
            outcome.points += 1;
        }
    }
}

/// New card, overwrite with a different section set, and delete.
pub fn standard_scenarios() -> Vec<Scenario> {
    let lead = build_lead_protection_fixture();
    let ink = build_ink_leak_fixture();
    let mut reworked = ink.clone();
    reworked.metadata.title = "Ink leak effect, revised".into();
    reworked.collaboration = None;
    reworked.kind = "process.tactic".parse().expect("kind");
    reworked.narrative = Some(Narrative {
        text: "Leaks start once the cap is off & the pen is warm.".into(),
        figure_refs: vec!["fig/leak.png".into()],
    });
    let mut rich = build_interior_diameter_fixture();
    rich.id = "pen_everything".into();
    rich.lexicon = build_pen_lexicon_fixture().lexicon;
    rich.concept_network = lead.concept_network.clone();
    rich.statechart = ink.statechart.clone();
    rich.collaboration = ink.collaboration.clone();
    vec![
        Scenario {
            name: "put",
            baseline: vec![lead.clone()],
            write: Write::Put(ink.clone()),
        },
        Scenario {
            name: "overwrite",
            baseline: vec![lead.clone(), ink.clone()],
            write: Write::Overwrite(reworked),
        },
        Scenario {
            name: "delete",
            baseline: vec![ink, lead.clone(), build_interior_diameter_fixture()],
            write: Write::Delete(lead.id),
        },
        Scenario {
            name: "put all sections",
            baseline: vec![],
            write: Write::Put(rich.clone()),
        },
        Scenario {
            name: "delete all sections",
            baseline: vec![rich.clone()],
            write: Write::Delete(rich.id),
        },
    ]
}

pub fn run_standard() -> Outcome {
    let mut outcome = Outcome::default();
    for scenario in standard_scenarios() {
        run(&scenario, &mut outcome);
    }
    outcome
}
