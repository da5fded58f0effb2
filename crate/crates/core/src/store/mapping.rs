use std::collections::BTreeMap;

use crate::model::KnowledgeCard;

/// A concept resource and the vocabulary card that defines it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Definition {
    pub card_id: String,
    pub label: String,
}

/// Which vocabulary card defines each concept. Several cards may register the
/// same concept with the same label; the earliest registered one defines it.
#[derive(Debug, Clone, Default)]
pub struct ResourceMapping {
    by_concept: BTreeMap<String, BTreeMap<u64, Definition>>,
}

/// A concept a card would register with a label that differs from the
/// existing definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflict {
    pub concept: String,
    pub defined_by: String,
    pub existing_label: String,
    pub new_label: String,
}

impl ResourceMapping {
    /// First conflicting concept if `card` were registered, ignoring
    /// registrations by a card with the same id.
    pub fn conflict(&self, card: &KnowledgeCard) -> Option<Conflict> {
        if !card.kind.is_vocabulary() {
            return None;
        }
        let net = card.concept_network.as_ref()?;
        net.concepts.iter().find_map(|c| {
            let defs = self.by_concept.get(&c.id)?;
            let (_, def) = defs.iter().find(|(_, d)| d.card_id != card.id)?;
            (def.label != c.label).then(|| Conflict {
                concept: c.id.clone(),
                defined_by: def.card_id.clone(),
                existing_label: def.label.clone(),
                new_label: c.label.clone(),
            })
        })
    }

    pub fn register(&mut self, seq: u64, card: &KnowledgeCard) {
        if !card.kind.is_vocabulary() {
            return;
        }
        let Some(net) = &card.concept_network else { return };
        for c in &net.concepts {
            self.by_concept.entry(c.id.clone()).or_default().insert(
                seq,
                Definition {
                    card_id: card.id.clone(),
                    label: c.label.clone(),
                },
            );
        }
    }

    pub fn unregister(&mut self, card_id: &str) {
        for defs in self.by_concept.values_mut() {
            defs.retain(|_, d| d.card_id != card_id);
        }
        self.by_concept.retain(|_, defs| !defs.is_empty());
    }

    pub fn defining(&self, concept: &str) -> Option<&Definition> {
        self.by_concept.get(concept)?.values().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Definition)> {
        self.by_concept
            .iter()
            .filter_map(|(c, defs)| Some((c.as_str(), defs.values().next()?)))
    }

    pub fn len(&self) -> usize {
        self.by_concept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_concept.is_empty()
    }
}
