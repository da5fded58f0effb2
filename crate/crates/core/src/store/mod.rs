//! Decomposed card persistence.
//!
//! Each card is split into records kept in separate repositories under one
//! root directory:
//!
//! ```text
//! <root>/metadata/<id>.xml                  card record: kind, metadata, section list
//! <root>/sections/<section>/<id>.xml        one file per section
//! <root>/rdf/links.nt                       link and Dublin Core triples, line format
//! <root>/rdf/schema.rdf                     property schema, RDF/XML
//! <root>/journal/                           write-ahead intent
//! ```
//!
//! Every write goes through one journaled transaction, so a crash at any
//! point leaves either the previous or the new record set after reopening.
//! Writers are serialized; readers run concurrently and never observe a
//! transaction in progress.

pub mod journal;
mod mapping;
mod records;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Mutex, RwLock, RwLockReadGuard};

use serde::Serialize;
use thiserror::Error;

use crate::model::{validate_card, CardKind, KnowledgeCard, SectionName};
use crate::rdf::{
    load_rdfxml, neighborhood, parse_lines, related_resources, saturate, write_lines, Iri, Neighborhood,
    PropertySchema, RdfError, Triple, TripleStore, LBN_SCHEMA_RDF,
};
use crate::report::Report;

pub use journal::{FaultAction, FaultHook};
pub use mapping::{Conflict, Definition, ResourceMapping};
pub use records::{card_resource, card_triples, concept_resource};

use journal::{Intent, Op, TxError};
use records::*;

pub const DEFAULT_BASE: &str = "http://localhost/";

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("a card with id '{0}' already exists")]
    DuplicateId(String),
    #[error("card failed validation:\n{0}")]
    ValidationFailed(Report),
    #[error("no card with id '{0}'")]
    NotFound(String),
    #[error(
        "concept '{}' is defined by card '{}' as '{}'; cannot redefine it as '{}'",
        .0.concept, .0.defined_by, .0.existing_label, .0.new_label
    )]
    Redefinition(Conflict),
    #[error("{context}: {source}")]
    StorageIo {
        context: String,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Rdf(#[from] RdfError),
}

impl StoreError {
    pub fn code(&self) -> &'static str {
        match self {
            StoreError::DuplicateId(_) => "DUPLICATE_ID",
            StoreError::ValidationFailed(_) => "VALIDATION_FAILED",
            StoreError::NotFound(_) => "NOT_FOUND",
            StoreError::Redefinition(_) => "REDEFINITION",
            StoreError::StorageIo { .. } => "STORAGE_IO",
            StoreError::Rdf(e) => e.code(),
        }
    }

    fn io(context: impl Into<String>, source: io::Error) -> Self {
        StoreError::StorageIo {
            context: context.into(),
            source,
        }
    }

    fn corrupt(path: &str, message: impl Into<String>) -> Self {
        StoreError::io(
            format!("corrupt record {path}"),
            io::Error::new(io::ErrorKind::InvalidData, message.into()),
        )
    }
}

pub type Result<T, E = StoreError> = std::result::Result<T, E>;

#[derive(Debug, Clone)]
pub struct StoreOptions {
    /// Prefix for concept resources; concept `Cap` becomes `<base>Cap`.
    pub base: String,
    /// Schema to use instead of `<root>/rdf/schema.rdf`.
    pub schema_path: Option<PathBuf>,
    /// Create the layout if it does not exist.
    pub create: bool,
}

impl Default for StoreOptions {
    fn default() -> Self {
        StoreOptions {
            base: DEFAULT_BASE.into(),
            schema_path: None,
            create: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CardSummary {
    pub id: String,
    pub kind: CardKind,
    pub title: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatedCard {
    pub resource: String,
    /// The vocabulary card defining the resource, if any.
    pub card_id: Option<String>,
}

struct Entry {
    record: MetadataRecord,
    triples: Vec<Triple>,
    concepts: Vec<String>,
}

struct State {
    cards: BTreeMap<String, Entry>,
    rdf: TripleStore,
    schema: PropertySchema,
    mapping: ResourceMapping,
    next_seq: u64,
}

pub struct CardStore {
    root: PathBuf,
    base: String,
    state: RwLock<State>,
    writer: Mutex<Option<FaultHook>>,
    poisoned: AtomicBool,
}

fn repository_dirs(root: &Path) -> Vec<PathBuf> {
    let mut dirs = vec![root.join(METADATA_DIR), root.join(RDF_DIR)];
    dirs.extend(SectionName::ALL.iter().map(|s| root.join(section_repository(*s))));
    dirs
}

/// Names of every repository in a store.
pub fn repository_names() -> Vec<String> {
    let mut names = vec![METADATA_DIR.to_string()];
    names.extend(SectionName::ALL.iter().map(|s| section_repository(*s)));
    names.push(RDF_DIR.to_string());
    names
}

fn read_to_string(root: &Path, rel: &str) -> Result<String> {
    fs::read_to_string(root.join(rel)).map_err(|e| StoreError::io(format!("reading {rel}"), e))
}

/// Creates the directory layout and default files where missing.
pub fn init_layout(root: &Path) -> Result<()> {
    for dir in repository_dirs(root).into_iter().chain([root.join(journal::JOURNAL_DIR)]) {
        fs::create_dir_all(&dir).map_err(|e| StoreError::io(format!("creating {}", dir.display()), e))?;
    }
    for (rel, content) in [(SCHEMA_FILE, LBN_SCHEMA_RDF), (LINKS_FILE, "")] {
        let path = root.join(rel);
        if !path.exists() {
            fs::write(&path, content).map_err(|e| StoreError::io(format!("writing {rel}"), e))?;
        }
    }
    Ok(())
}

fn is_initialized(root: &Path) -> bool {
    repository_dirs(root).iter().all(|d| d.is_dir()) && root.join(journal::JOURNAL_DIR).is_dir()
}

impl CardStore {
    pub fn open(root: impl AsRef<Path>, options: StoreOptions) -> Result<CardStore> {
        let root = root.as_ref().to_path_buf();
        if !Iri::is_absolute(&options.base) || Iri::new(options.base.clone()).is_err() {
            return Err(StoreError::Rdf(RdfError::BadIri {
                iri: options.base,
                reason: "the resource base must be an absolute IRI".into(),
            }));
        }
        if !is_initialized(&root) {
            if !options.create {
                return Err(StoreError::io(
                    format!("opening {}", root.display()),
                    io::Error::new(io::ErrorKind::NotFound, "not an initialized card store"),
                ));
            }
            init_layout(&root)?;
        }
        journal::recover(&root, &repository_dirs(&root)).map_err(|e| StoreError::io("recovering journal", e))?;

        let schema_text = match &options.schema_path {
            Some(p) => fs::read_to_string(p).map_err(|e| StoreError::io(format!("reading {}", p.display()), e))?,
            None => read_to_string(&root, SCHEMA_FILE)?,
        };
        let schema = load_rdfxml(&schema_text)?.schema;
        let state = Self::load_state(&root, &options.base, schema)?;
        Ok(CardStore {
            root,
            base: options.base,
            state: RwLock::new(state),
            writer: Mutex::new(None),
            poisoned: AtomicBool::new(false),
        })
    }

    fn load_state(root: &Path, base: &str, schema: PropertySchema) -> Result<State> {
        let links = read_to_string(root, LINKS_FILE)?;
        let mut rdf = TripleStore::new();
        rdf.extend(parse_lines(&links).map_err(|e| StoreError::corrupt(LINKS_FILE, e.to_string()))?);

        let mut state = State {
            cards: BTreeMap::new(),
            rdf,
            schema,
            mapping: ResourceMapping::default(),
            next_seq: 1,
        };
        let dir = root.join(METADATA_DIR);
        let listing = fs::read_dir(&dir).map_err(|e| StoreError::io("listing metadata", e))?;
        let mut ids = Vec::new();
        for entry in listing {
            let entry = entry.map_err(|e| StoreError::io("listing metadata", e))?;
            let name = entry.file_name().to_string_lossy().into_owned();
            if let Some(id) = name.strip_suffix(".xml") {
                ids.push(id.to_string());
            }
        }
        ids.sort();
        for id in ids {
            let (record, card) = read_card(root, &id)?;
            state.next_seq = state.next_seq.max(record.seq + 1);
            state.mapping.register(record.seq, &card);
            state.cards.insert(id, entry_for(record, &card, base));
        }
        Ok(state)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    fn read(&self) -> Result<RwLockReadGuard<'_, State>> {
        self.check_poisoned()?;
        Ok(self.state.read().unwrap_or_else(|e| e.into_inner()))
    }

    fn check_poisoned(&self) -> Result<()> {
        if self.poisoned.load(Ordering::SeqCst) {
            return Err(StoreError::io(
                "store unusable",
                io::Error::other("a previous write stopped mid-transaction; reopen the store"),
            ));
        }
        Ok(())
    }

    /// Installs a hook consulted before every durable step of later writes.
    pub fn set_fault_hook(&self, hook: Option<FaultHook>) {
        *self.writer.lock().unwrap_or_else(|e| e.into_inner()) = hook;
    }

    /// Stores a valid card. Fails with `DuplicateId` when the id exists and
    /// `overwrite` is false.
    pub fn put_card(&self, card: &KnowledgeCard, overwrite: bool) -> Result<String> {
        let report = validate_card(card);
        if !report.is_empty() {
            return Err(StoreError::ValidationFailed(report));
        }
        let mut hook = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        let (intent, seq, new_rdf) = {
            let state = self.read()?;
            let existing = state.cards.get(&card.id);
            if existing.is_some() && !overwrite {
                return Err(StoreError::DuplicateId(card.id.clone()));
            }
            if let Some(conflict) = state.mapping.conflict(card) {
                return Err(StoreError::Redefinition(conflict));
            }
            let seq = existing.map_or(state.next_seq, |e| e.record.seq);
            let old_sections = existing.map(|e| e.record.sections.clone()).unwrap_or_default();

            let mut rdf = state.rdf.clone();
            for t in existing.iter().flat_map(|e| &e.triples) {
                rdf.remove(t);
            }
            rdf.extend(card_triples(card, &self.base));

            let record = MetadataRecord {
                id: card.id.clone(),
                kind: card.kind,
                seq,
                metadata: card.metadata.clone(),
                sections: card.sections(),
            };
            let mut ops = Vec::new();
            for s in card.sections() {
                ops.push(Op::Write {
                    path: section_path(s, &card.id),
                    content: encode_section_record(card, s).expect("section is set"),
                });
            }
            for s in old_sections.iter().filter(|s| !record.sections.contains(s)) {
                ops.push(Op::Remove {
                    path: section_path(*s, &card.id),
                });
            }
            ops.push(Op::Write {
                path: metadata_path(&card.id),
                content: encode_metadata_record(&record),
            });
            ops.push(Op::Write {
                path: LINKS_FILE.into(),
                content: write_lines(rdf.asserted()),
            });
            (Intent { ops }, seq, rdf)
        };

        self.commit(&mut hook, &intent, |state| {
            if let Some(old) = state.cards.remove(&card.id) {
                state.mapping.unregister(&old.record.id);
            }
            state.mapping.register(seq, card);
            let record = MetadataRecord {
                id: card.id.clone(),
                kind: card.kind,
                seq,
                metadata: card.metadata.clone(),
                sections: card.sections(),
            };
            state.cards.insert(card.id.clone(), entry_for(record, card, &self.base));
            state.rdf = new_rdf;
            state.next_seq = state.next_seq.max(seq + 1);
        })?;
        Ok(card.id.clone())
    }

    pub fn delete_card(&self, id: &str) -> Result<()> {
        let mut hook = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        let (intent, new_rdf) = {
            let state = self.read()?;
            let entry = state.cards.get(id).ok_or_else(|| StoreError::NotFound(id.to_string()))?;
            let mut rdf = state.rdf.clone();
            for t in &entry.triples {
                rdf.remove(t);
            }
            let mut ops: Vec<Op> = entry
                .record
                .sections
                .iter()
                .map(|s| Op::Remove {
                    path: section_path(*s, id),
                })
                .collect();
            ops.push(Op::Remove { path: metadata_path(id) });
            ops.push(Op::Write {
                path: LINKS_FILE.into(),
                content: write_lines(rdf.asserted()),
            });
            (Intent { ops }, rdf)
        };
        self.commit(&mut hook, &intent, |state| {
            state.cards.remove(id);
            state.mapping.unregister(id);
            state.rdf = new_rdf;
        })
    }

    /// Runs a transaction and, once it is durable, applies `update` to the
    /// in-memory state. Readers are held off while files change.
    fn commit(
        &self,
        hook: &mut Option<FaultHook>,
        intent: &Intent,
        update: impl FnOnce(&mut State),
    ) -> Result<()> {
        self.check_poisoned()?;
        let mut state = self.state.write().unwrap_or_else(|e| e.into_inner());
        match journal::execute(&self.root, intent, hook.as_mut()) {
            Ok(()) => {
                update(&mut state);
                Ok(())
            }
            Err(TxError::Crash { .. }) => {
                self.poisoned.store(true, Ordering::SeqCst);
                Err(StoreError::io("write interrupted", io::Error::other("simulated crash")))
            }
            Err(TxError::Io { committed, error }) => {
                // Settle the disk on one side of the commit point.
                if let Err(e) = journal::recover(&self.root, &repository_dirs(&self.root)) {
                    self.poisoned.store(true, Ordering::SeqCst);
                    return Err(StoreError::io("recovering after a failed write", e));
                }
                if committed {
                    update(&mut state);
                    Ok(())
                } else {
                    Err(StoreError::io("write failed", error))
                }
            }
        }
    }

    /// Reassembles a card from its records.
    pub fn get_card(&self, id: &str) -> Result<KnowledgeCard> {
        let state = self.read()?;
        if !state.cards.contains_key(id) {
            return Err(StoreError::NotFound(id.to_string()));
        }
        let (_, card) = read_card(&self.root, id)?;
        Ok(card)
    }

    pub fn contains(&self, id: &str) -> Result<bool> {
        Ok(self.read()?.cards.contains_key(id))
    }

    /// Cards ordered by id, optionally restricted to one kind.
    pub fn list_cards(&self, kind: Option<CardKind>) -> Result<Vec<CardSummary>> {
        let state = self.read()?;
        Ok(state
            .cards
            .values()
            .filter(|e| kind.is_none_or(|k| e.record.kind == k))
            .map(|e| CardSummary {
                id: e.record.id.clone(),
                kind: e.record.kind,
                title: e.record.metadata.title.clone(),
            })
            .collect())
    }

    /// Repositories holding records of a card, as found on disk.
    pub fn repositories_of(&self, id: &str) -> Result<Vec<String>> {
        let state = self.read()?;
        let entry = state.cards.get(id).ok_or_else(|| StoreError::NotFound(id.to_string()))?;
        let mut out = Vec::new();
        if self.root.join(metadata_path(id)).is_file() {
            out.push(METADATA_DIR.to_string());
        }
        for s in SectionName::ALL {
            if self.root.join(section_path(s, id)).is_file() {
                out.push(section_repository(s));
            }
        }
        if entry.triples.iter().any(|t| state.rdf.contains(t)) {
            out.push(RDF_DIR.to_string());
        }
        Ok(out)
    }

    /// The RDF store as currently committed (asserted triples only).
    pub fn rdf_snapshot(&self) -> Result<TripleStore> {
        Ok(self.read()?.rdf.clone())
    }

    /// The RDF store with `subPropertyOf` consequences added.
    pub fn saturated_rdf(&self) -> Result<TripleStore> {
        let state = self.read()?;
        Ok(saturate(&state.rdf, &state.schema))
    }

    /// The triples derivable from the cards on disk, independent of the
    /// link repository.
    pub fn rebuild_rdf(&self) -> Result<TripleStore> {
        let state = self.read()?;
        let mut rdf = TripleStore::new();
        for id in state.cards.keys() {
            let (_, card) = read_card(&self.root, id)?;
            rdf.extend(card_triples(&card, &self.base));
        }
        Ok(rdf)
    }

    pub fn schema(&self) -> Result<PropertySchema> {
        Ok(self.read()?.schema.clone())
    }

    /// Concept id for a resource under the base, if it is one.
    pub fn concept_of<'a>(&self, resource: &'a Iri) -> Option<&'a str> {
        resource.as_str().strip_prefix(self.base.as_str()).filter(|c| !c.is_empty())
    }

    /// Reads `text` as an absolute IRI, a prefixed name, or a concept id
    /// under the base.
    pub fn resolve_resource(&self, text: &str) -> Result<Iri> {
        if crate::model::is_concept_id(text) {
            return Ok(concept_resource(&self.base, text));
        }
        Ok(crate::rdf::Namespaces::default().resolve(text)?)
    }

    pub fn defining_card(&self, resource: &Iri) -> Result<Option<String>> {
        let state = self.read()?;
        Ok(self
            .concept_of(resource)
            .and_then(|c| state.mapping.defining(c))
            .map(|d| d.card_id.clone()))
    }

    pub fn mapping(&self) -> Result<ResourceMapping> {
        Ok(self.read()?.mapping.clone())
    }

    fn related_in(&self, state: &State, resource: &Iri, relation: &Iri, infer: bool) -> Result<Vec<RelatedCard>> {
        let found = related_resources(&state.rdf, &state.schema, resource, relation, infer)?;
        Ok(found
            .into_iter()
            .map(|r| RelatedCard {
                card_id: self
                    .concept_of(&r)
                    .and_then(|c| state.mapping.defining(c))
                    .map(|d| d.card_id.clone()),
                resource: r.to_string(),
            })
            .collect())
    }

    /// Resources related to `resource` through `relation` (or, with
    /// `infer`, any of its sub-properties), each with its defining card.
    pub fn find_related_cards(&self, resource: &Iri, relation: &Iri, infer: bool) -> Result<Vec<RelatedCard>> {
        let state = self.read()?;
        self.related_in(&state, resource, relation, infer)
    }

    /// [`find_related_cards`](Self::find_related_cards) for every concept of
    /// a card's concept network, merged and ordered by resource.
    pub fn related_for_card(&self, id: &str, relation: &Iri, infer: bool) -> Result<Vec<RelatedCard>> {
        let state = self.read()?;
        let entry = state.cards.get(id).ok_or_else(|| StoreError::NotFound(id.to_string()))?;
        let mut merged: BTreeMap<String, Option<String>> = BTreeMap::new();
        for concept in &entry.concepts {
            let resource = concept_resource(&self.base, concept);
            for r in self.related_in(&state, &resource, relation, infer)? {
                merged.insert(r.resource, r.card_id);
            }
        }
        Ok(merged
            .into_iter()
            .map(|(resource, card_id)| RelatedCard { resource, card_id })
            .collect())
    }

    /// Breadth-first neighbourhood of `root` over `lb:` relations.
    pub fn neighborhood(&self, root: &Iri, depth: usize, infer: bool) -> Result<Neighborhood> {
        let state = self.read()?;
        if infer {
            Ok(neighborhood(&saturate(&state.rdf, &state.schema), root, depth)?)
        } else {
            Ok(neighborhood(&state.rdf, root, depth)?)
        }
    }

    /// Compares the link repository with a rebuild from the card records.
    pub fn check_consistency(&self) -> Result<bool> {
        let rebuilt = self.rebuild_rdf()?;
        Ok(self.rdf_snapshot()?.triple_set() == rebuilt.triple_set())
    }

    /// Ids of all stored cards.
    pub fn ids(&self) -> Result<BTreeSet<String>> {
        Ok(self.read()?.cards.keys().cloned().collect())
    }
}

fn entry_for(record: MetadataRecord, card: &KnowledgeCard, base: &str) -> Entry {
    Entry {
        record,
        triples: card_triples(card, base),
        concepts: card
            .concept_network
            .iter()
            .flat_map(|n| n.concepts.iter().map(|c| c.id.clone()))
            .collect(),
    }
}

fn read_card(root: &Path, id: &str) -> Result<(MetadataRecord, KnowledgeCard)> {
    let meta_rel = metadata_path(id);
    let record =
        decode_metadata_record(&read_to_string(root, &meta_rel)?).map_err(|m| StoreError::corrupt(&meta_rel, m))?;
    if record.id != id {
        return Err(StoreError::corrupt(&meta_rel, format!("record names card '{}'", record.id)));
    }
    let mut card = KnowledgeCard::new(id, record.kind, record.metadata.clone());
    for s in &record.sections {
        let rel = section_path(*s, id);
        decode_section_record(&read_to_string(root, &rel)?, *s, &mut card).map_err(|m| StoreError::corrupt(&rel, m))?;
    }
    Ok((record, card))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::*;
    use crate::rdf::{isomorphic, load_rdfxml, Origin, DC_NS, LEAD_PROTECTION_RDF};

    fn open(dir: &Path) -> CardStore {
        CardStore::open(
            dir,
            StoreOptions {
                create: true,
                ..StoreOptions::default()
            },
        )
        .unwrap()
    }

    fn res(s: &str) -> Iri {
        Iri::new(format!("http://localhost/{s}")).unwrap()
    }

    #[test]
    fn put_get_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        for card in pen_corpus() {
            store.put_card(&card, false).unwrap();
            assert_eq!(store.get_card(&card.id).unwrap(), card);
        }
        drop(store);
        let store = open(dir.path());
        for card in pen_corpus() {
            assert_eq!(store.get_card(&card.id).unwrap(), card);
        }
        assert!(store.check_consistency().unwrap());
    }

    #[test]
    fn lead_protection_graph_appears() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        store.put_card(&build_lead_protection_fixture(), false).unwrap();
        let rdf = store.rdf_snapshot().unwrap();
        let links: BTreeSet<Triple> = rdf
            .triples()
            .filter(|t| !t.predicate.as_str().starts_with(DC_NS))
            .cloned()
            .collect();
        let reference = load_rdfxml(LEAD_PROTECTION_RDF).unwrap().into_store().triple_set();
        assert!(isomorphic(&links, &reference));
        assert_eq!(rdf.len(), 11);
        assert!(rdf.iter().all(|(_, o)| o == Origin::Asserted));
    }

    #[test]
    fn duplicate_and_invalid_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        let card = build_lead_protection_fixture();
        store.put_card(&card, false).unwrap();
        assert_eq!(store.put_card(&card, false).unwrap_err().code(), "DUPLICATE_ID");
        store.put_card(&card, true).unwrap();

        let mut bad = card.clone();
        bad.id = "dangling".into();
        bad.concept_network.as_mut().unwrap().relations[0].to = "nowhere".into();
        assert_eq!(store.put_card(&bad, false).unwrap_err().code(), "VALIDATION_FAILED");
    }

    #[test]
    fn delete_restores_rdf() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        store.put_card(&build_pen_lexicon_fixture(), false).unwrap();
        let before = store.rdf_snapshot().unwrap();
        store.put_card(&build_lead_protection_fixture(), false).unwrap();
        store.delete_card("lead_protection").unwrap();
        assert_eq!(store.rdf_snapshot().unwrap(), before);
        assert_eq!(store.get_card("lead_protection").unwrap_err().code(), "NOT_FOUND");
        assert_eq!(store.delete_card("lead_protection").unwrap_err().code(), "NOT_FOUND");
        assert_eq!(store.list_cards(None).unwrap().len(), 1);
    }

    #[test]
    fn physic_card_spans_repositories() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        let card = build_ink_leak_fixture();
        store.put_card(&card, false).unwrap();
        let repos = store.repositories_of(&card.id).unwrap();
        assert!(repos.contains(&"sections/statechart".to_string()));
        assert!(repos.contains(&"sections/collaboration".to_string()));
        assert!(repos.contains(&"metadata".to_string()));
    }

    #[test]
    fn list_filters_by_kind() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        assert!(store.list_cards(None).unwrap().is_empty());
        for card in pen_corpus().into_iter().take(3) {
            store.put_card(&card, false).unwrap();
        }
        let kind: CardKind = "appraise.payment".parse().unwrap();
        assert_eq!(store.list_cards(Some(kind)).unwrap().len(), 1);
        let ids: Vec<_> = store.list_cards(None).unwrap().into_iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn related_cards_with_definitions() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        store.put_card(&build_lead_protection_fixture(), false).unwrap();
        let related = store.find_related_cards(&res("Cap"), &Iri::lb("composition"), false).unwrap();
        assert_eq!(
            related,
            vec![
                RelatedCard {
                    resource: res("Closer").to_string(),
                    card_id: Some("lead_protection".into())
                },
                RelatedCard {
                    resource: res("clip").to_string(),
                    card_id: Some("lead_protection".into())
                },
            ]
        );
        let inferred = store.find_related_cards(&res("Cap"), &Iri::lb("semantique_metier"), true).unwrap();
        assert_eq!(inferred, related);
        assert!(store.find_related_cards(&res("Nib"), &Iri::lb("composition"), false).unwrap().is_empty());

        let by_card = store.related_for_card("lead_protection", &Iri::lb("aggregation"), false).unwrap();
        let names: Vec<_> = by_card.iter().map(|r| r.resource.as_str()).collect();
        assert_eq!(names, vec!["http://localhost/Cap", "http://localhost/mecanism"]);
    }

    #[test]
    fn redefinition_refused() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        store.put_card(&build_lead_protection_fixture(), false).unwrap();
        let mut other = build_lead_protection_fixture();
        other.id = "clothing".into();
        other.concept_network.as_mut().unwrap().concepts[2].label = "hat".into();
        assert_eq!(store.put_card(&other, false).unwrap_err().code(), "REDEFINITION");
    }

    #[test]
    fn overwrite_drops_removed_sections() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        let mut card = build_interior_diameter_fixture();
        card.lexicon = Some(vec![LexiconEntry::new("cone", "tip cone")]);
        store.put_card(&card, false).unwrap();
        assert!(dir.path().join("sections/lexicon/interior_diameter.xml").exists());
        card.lexicon = None;
        store.put_card(&card, true).unwrap();
        assert!(!dir.path().join("sections/lexicon/interior_diameter.xml").exists());
        assert_eq!(store.get_card(&card.id).unwrap(), card);
    }

    #[test]
    fn uninitialized_root_refused_without_create() {
        let dir = tempfile::tempdir().unwrap();
        let err = CardStore::open(dir.path().join("missing"), StoreOptions::default()).err().unwrap();
        assert_eq!(err.code(), "STORAGE_IO");
    }

    #[test]
    fn failed_write_before_commit_is_invisible() {
        let dir = tempfile::tempdir().unwrap();
        let store = open(dir.path());
        store.set_fault_hook(Some(Box::new(|n, _| if n == 1 { FaultAction::Fail } else { FaultAction::Proceed })));
        let card = build_lead_protection_fixture();
        assert_eq!(store.put_card(&card, false).unwrap_err().code(), "STORAGE_IO");
        assert!(store.list_cards(None).unwrap().is_empty());
        store.set_fault_hook(Some(Box::new(|n, _| if n == 4 { FaultAction::Fail } else { FaultAction::Proceed })));
        store.put_card(&card, false).unwrap();
        assert_eq!(store.get_card(&card.id).unwrap(), card);
        assert!(store.check_consistency().unwrap());
    }
}
