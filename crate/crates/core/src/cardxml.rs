//! XML interchange format for knowledge cards (schema version 1).
//!
//! ```text
//! <knowledge-card id="…" kind="domain.subtype" version="1">
//!   <metadata> title creator date description? language? </metadata>
//!   <lexicon>? <concept-network>? <statechart>? <collaboration>?
//!   <constraints>? <narrative>?
//! </knowledge-card>
//! ```
//!
//! The schema is closed: unknown elements and attributes are rejected.
//! Serialization is canonical (fixed section order, two-space indent), so
//! the same card always produces the same bytes.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use chrono::NaiveDate;
use thiserror::Error;

use crate::model::{
    validate_card, CardMetadata, Collaboration, CollaborationObject, Concept, ConceptNetwork,
    ConceptRelation, ConstraintAttachment, KnowledgeCard, LexiconEntry, Message, Narrative,
    SectionName, State, StateChart, Transition,
};
use crate::report::{Code, Issue, Report};
use crate::xml::{escape_attr, escape_text, is_xml_char, parse_document, Element};

pub const SCHEMA_VERSION: &str = "1";
pub const XML_DECL: &str = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
const ROOT: &str = "/knowledge-card";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CardXmlError {
    /// The document is not well-formed or does not follow the card schema.
    #[error("card document does not conform to the card schema:\n{0}")]
    Schema(Report),
    /// The document is well-formed but the card breaks a model rule.
    #[error("card violates its kind's rules:\n{0}")]
    Invalid(Report),
}

impl CardXmlError {
    pub fn report(&self) -> &Report {
        match self {
            CardXmlError::Schema(r) | CardXmlError::Invalid(r) => r,
        }
    }
}

// ---------------------------------------------------------------- encoding

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn text_element(out: &mut String, depth: usize, name: &str, text: &str) {
    indent(out, depth);
    let _ = writeln!(out, "<{name}>{}</{name}>", escape_text(text));
}

fn empty_element(out: &mut String, depth: usize, name: &str, attrs: &[(&str, &str)]) {
    indent(out, depth);
    out.push('<');
    out.push_str(name);
    for (k, v) in attrs {
        let _ = write!(out, " {k}=\"{}\"", escape_attr(v));
    }
    out.push_str("/>\n");
}

fn open(out: &mut String, depth: usize, name: &str) {
    indent(out, depth);
    let _ = writeln!(out, "<{name}>");
}

fn close(out: &mut String, depth: usize, name: &str) {
    indent(out, depth);
    let _ = writeln!(out, "</{name}>");
}

/// The `<metadata>` element at the given indentation depth.
pub fn write_metadata(out: &mut String, meta: &CardMetadata, depth: usize) {
    open(out, depth, "metadata");
    text_element(out, depth + 1, "title", &meta.title);
    text_element(out, depth + 1, "creator", &meta.creator);
    text_element(out, depth + 1, "date", &meta.date.format("%Y-%m-%d").to_string());
    if let Some(d) = &meta.description {
        text_element(out, depth + 1, "description", d);
    }
    if let Some(l) = &meta.language {
        text_element(out, depth + 1, "language", l);
    }
    close(out, depth, "metadata");
}

/// Writes one section element; returns false when the card lacks it.
pub fn write_section(out: &mut String, card: &KnowledgeCard, section: SectionName, depth: usize) -> bool {
    let name = section.as_str();
    let d = depth + 1;
    match section {
        SectionName::Lexicon => {
            let Some(entries) = &card.lexicon else { return false };
            open(out, depth, name);
            for e in entries {
                indent(out, d);
                let _ = writeln!(out, "<entry term=\"{}\">", escape_attr(&e.term));
                text_element(out, d + 1, "definition", &e.definition);
                close(out, d, "entry");
            }
        }
        SectionName::ConceptNetwork => {
            let Some(net) = &card.concept_network else { return false };
            open(out, depth, name);
            for c in &net.concepts {
                empty_element(out, d, "concept", &[("id", &c.id), ("label", &c.label)]);
            }
            for r in &net.relations {
                let mut attrs = vec![("kind", r.kind.as_str()), ("from", &r.from), ("to", &r.to)];
                if let Some(label) = &r.label {
                    attrs.push(("label", label));
                }
                empty_element(out, d, "relation", &attrs);
            }
        }
        SectionName::Statechart => {
            let Some(chart) = &card.statechart else { return false };
            open(out, depth, name);
            for s in &chart.states {
                empty_element(out, d, "state", &[("id", &s.id), ("label", &s.label)]);
            }
            empty_element(out, d, "initial", &[("ref", &chart.initial)]);
            for t in &chart.transitions {
                empty_element(
                    out,
                    d,
                    "transition",
                    &[("from", &t.from), ("to", &t.to), ("event", &t.event)],
                );
            }
        }
        SectionName::Collaboration => {
            let Some(collab) = &card.collaboration else { return false };
            open(out, depth, name);
            for o in &collab.objects {
                empty_element(out, d, "object", &[("id", &o.id), ("label", &o.label)]);
            }
            for m in &collab.messages {
                let seq = m.seq.to_string();
                empty_element(
                    out,
                    d,
                    "message",
                    &[("seq", &seq), ("from", &m.from), ("to", &m.to), ("label", &m.label)],
                );
            }
        }
        SectionName::Constraints => {
            let Some(constraints) = &card.constraints else { return false };
            open(out, depth, name);
            for c in constraints {
                indent(out, d);
                let src = c.source_text();
                if src.contains("]]>") || src.contains('\r') {
                    let _ = writeln!(out, "<constraint>{}</constraint>", escape_text(src));
                } else {
                    let _ = writeln!(out, "<constraint><![CDATA[{src}]]></constraint>");
                }
            }
        }
        SectionName::Narrative => {
            let Some(n) = &card.narrative else { return false };
            open(out, depth, name);
            text_element(out, d, "text", &n.text);
            for f in &n.figure_refs {
                empty_element(out, d, "figure", &[("href", f)]);
            }
        }
    }
    close(out, depth, name);
    true
}

fn check_characters(doc: &str) -> Report {
    let mut report = Report::new();
    if let Some((offset, c)) = doc.chars().enumerate().find(|(_, c)| !is_xml_char(*c)) {
        report.push(
            Issue::new(
                Code::IllegalCharacter,
                ROOT,
                format!("U+{:04X} cannot appear in an XML document", c as u32),
            )
            .at_offset(offset),
        );
    }
    report
}

/// Canonical XML for a valid card.
pub fn serialize_card(card: &KnowledgeCard) -> Result<String, CardXmlError> {
    let report = validate_card(card);
    if !report.is_empty() {
        return Err(CardXmlError::Invalid(report));
    }
    let mut out = String::from(XML_DECL);
    let _ = writeln!(
        out,
        "<knowledge-card id=\"{}\" kind=\"{}\" version=\"{SCHEMA_VERSION}\">",
        escape_attr(&card.id),
        card.kind
    );
    write_metadata(&mut out, &card.metadata, 1);
    for section in SectionName::ALL {
        write_section(&mut out, card, section, 1);
    }
    out.push_str("</knowledge-card>\n");

    let report = check_characters(&out);
    if !report.is_empty() {
        return Err(CardXmlError::Invalid(report));
    }
    Ok(out)
}

/// A section as a standalone document (used for per-section storage).
pub fn section_document(card: &KnowledgeCard, section: SectionName) -> Option<String> {
    let mut out = String::from(XML_DECL);
    write_section(&mut out, card, section, 0).then_some(out)
}

// ---------------------------------------------------------------- decoding

type Attrs<'e> = HashMap<&'e str, &'e str>;

#[derive(Default)]
struct Decoder {
    issues: Vec<Issue>,
}

/// Plain (unprefixed, no namespace) local name.
fn plain_name(el: &Element) -> Option<&str> {
    (el.name.namespace.is_none() && el.name.prefix.is_none()).then_some(el.name.local.as_str())
}

impl Decoder {
    fn issue(&mut self, code: Code, path: &str, message: impl Into<String>, offset: usize) {
        self.issues
            .push(Issue::new(code, path, message).at_offset(offset));
    }

    fn unknown_element(&mut self, el: &Element, parent: &str) {
        let path = format!("{parent}/{}", el.name.qualified());
        self.issue(
            Code::UnknownElement,
            &path,
            format!("element <{}> is not allowed here", el.name.qualified()),
            el.offset,
        );
    }

    /// Checks the attribute set; `None` when a required attribute is missing.
    fn attrs<'e>(
        &mut self,
        el: &'e Element,
        path: &str,
        required: &[&str],
        optional: &[&str],
    ) -> Option<Attrs<'e>> {
        let mut map = Attrs::new();
        for a in &el.attributes {
            let name = a.name.local.as_str();
            let known = a.name.namespace.is_none()
                && a.name.prefix.is_none()
                && (required.contains(&name) || optional.contains(&name));
            if known {
                map.insert(name, a.value.as_str());
            } else {
                self.issue(
                    Code::UnknownAttribute,
                    &format!("{path}/@{}", a.name.qualified()),
                    format!("attribute '{}' is not allowed on <{}>", a.name.qualified(), el.name.local),
                    el.offset,
                );
            }
        }
        let mut complete = true;
        for name in required {
            if !map.contains_key(name) {
                self.issue(
                    Code::MissingAttribute,
                    &format!("{path}/@{name}"),
                    format!("<{}> requires attribute '{name}'", el.name.local),
                    el.offset,
                );
                complete = false;
            }
        }
        complete.then_some(map)
    }

    /// Element children, flagging non-whitespace text.
    fn children<'e>(&mut self, el: &'e Element, path: &str) -> Vec<&'e Element> {
        if el.has_significant_text() {
            self.issue(
                Code::UnexpectedText,
                path,
                format!("<{}> may only contain elements", el.name.local),
                el.offset,
            );
        }
        el.elements().collect()
    }

    /// Text content of a leaf element, flagging nested elements.
    fn text(&mut self, el: &Element, path: &str) -> String {
        for child in el.elements() {
            self.unknown_element(child, path);
        }
        el.text()
    }

    fn indexed(counters: &mut HashMap<String, usize>, parent: &str, name: &str) -> String {
        let n = counters.entry(name.to_string()).or_default();
        *n += 1;
        format!("{parent}/{name}[{n}]")
    }

    fn card(&mut self, root: &Element) -> Option<KnowledgeCard> {
        if plain_name(root) != Some("knowledge-card") {
            self.issue(
                Code::UnknownElement,
                &format!("/{}", root.name.qualified()),
                "root element must be <knowledge-card>",
                root.offset,
            );
            return None;
        }
        let attrs = self.attrs(root, ROOT, &["id", "kind", "version"], &[]);
        let kind = attrs.as_ref().and_then(|a| match a["kind"].parse() {
            Ok(k) => Some(k),
            Err(e) => {
                self.issue(Code::BadKind, &format!("{ROOT}/@kind"), format!("{e}"), root.offset);
                None
            }
        });
        if let Some(a) = &attrs {
            if a["version"] != SCHEMA_VERSION {
                self.issue(
                    Code::BadVersion,
                    &format!("{ROOT}/@version"),
                    format!("unsupported card schema version '{}'", a["version"]),
                    root.offset,
                );
            }
        }

        let mut metadata = None;
        let mut seen_metadata = false;
        let mut seen: HashSet<SectionName> = HashSet::new();
        let mut sections = KnowledgeCard::new(String::new(), crate::model::CardKind::all().next()?, placeholder_metadata());
        for child in self.children(root, ROOT) {
            let name = plain_name(child);
            if name == Some("metadata") {
                let path = format!("{ROOT}/metadata");
                if seen_metadata {
                    self.issue(Code::DuplicateElement, &path, "<metadata> appears twice", child.offset);
                    continue;
                }
                seen_metadata = true;
                metadata = self.metadata(child, &path);
                continue;
            }
            match name.and_then(|n| n.parse::<SectionName>().ok()) {
                Some(section) => {
                    let path = format!("{ROOT}/{section}");
                    if !seen.insert(section) {
                        self.issue(
                            Code::DuplicateSection,
                            &path,
                            format!("section <{section}> appears more than once"),
                            child.offset,
                        );
                        continue;
                    }
                    self.section(child, section, &path, &mut sections);
                }
                None => self.unknown_element(child, ROOT),
            }
        }
        if !seen_metadata {
            self.issue(
                Code::MissingElement,
                &format!("{ROOT}/metadata"),
                "<metadata> is required",
                root.offset,
            );
        }

        if !self.issues.is_empty() {
            return None;
        }
        sections.id = attrs?["id"].to_string();
        sections.kind = kind?;
        sections.metadata = metadata?;
        Some(sections)
    }

    fn metadata(&mut self, el: &Element, path: &str) -> Option<CardMetadata> {
        self.attrs(el, path, &[], &[]);
        let mut fields: HashMap<&str, String> = HashMap::new();
        let mut date_ok = true;
        for child in self.children(el, path) {
            let name = plain_name(child);
            match name {
                Some(n @ ("title" | "creator" | "date" | "description" | "language")) => {
                    let child_path = format!("{path}/{n}");
                    self.attrs(child, &child_path, &[], &[]);
                    if fields.contains_key(n) {
                        self.issue(
                            Code::DuplicateElement,
                            &child_path,
                            format!("<{n}> appears twice"),
                            child.offset,
                        );
                        continue;
                    }
                    let text = self.text(child, &child_path);
                    if n == "date" && parse_date(&text).is_none() {
                        self.issue(
                            Code::BadDate,
                            &child_path,
                            format!("'{text}' is not a YYYY-MM-DD calendar date"),
                            child.offset,
                        );
                        date_ok = false;
                    }
                    fields.insert(n, text);
                }
                _ => self.unknown_element(child, path),
            }
        }
        for required in ["title", "creator", "date"] {
            if !fields.contains_key(required) {
                self.issue(
                    Code::MissingElement,
                    &format!("{path}/{required}"),
                    format!("<metadata> requires <{required}>"),
                    el.offset,
                );
            }
        }
        if !date_ok {
            return None;
        }
        Some(CardMetadata {
            title: fields.remove("title")?,
            creator: fields.remove("creator")?,
            date: parse_date(&fields.remove("date")?)?,
            description: fields.remove("description"),
            language: fields.remove("language"),
        })
    }

    fn section(&mut self, el: &Element, section: SectionName, path: &str, card: &mut KnowledgeCard) {
        self.attrs(el, path, &[], &[]);
        let children = self.children(el, path);
        let mut counters = HashMap::new();
        match section {
            SectionName::Lexicon => {
                let mut entries = Vec::new();
                for child in children {
                    if plain_name(child) != Some("entry") {
                        self.unknown_element(child, path);
                        continue;
                    }
                    let p = Self::indexed(&mut counters, path, "entry");
                    let Some(a) = self.attrs(child, &p, &["term"], &[]) else { continue };
                    let mut definition = None;
                    for d in self.children(child, &p) {
                        if plain_name(d) != Some("definition") {
                            self.unknown_element(d, &p);
                            continue;
                        }
                        let dp = format!("{p}/definition");
                        self.attrs(d, &dp, &[], &[]);
                        if definition.is_some() {
                            self.issue(Code::DuplicateElement, &dp, "<definition> appears twice", d.offset);
                            continue;
                        }
                        definition = Some(self.text(d, &dp));
                    }
                    match definition {
                        Some(definition) => entries.push(LexiconEntry {
                            term: a["term"].to_string(),
                            definition,
                        }),
                        None => self.issue(
                            Code::MissingElement,
                            &format!("{p}/definition"),
                            "<entry> requires <definition>",
                            child.offset,
                        ),
                    }
                }
                card.lexicon = Some(entries);
            }
            SectionName::ConceptNetwork => {
                let mut net = ConceptNetwork::default();
                for child in children {
                    match plain_name(child) {
                        Some("concept") => {
                            let p = Self::indexed(&mut counters, path, "concept");
                            if let Some(a) = self.attrs(child, &p, &["id", "label"], &[]) {
                                self.text_free(child, &p);
                                net.concepts.push(Concept::new(a["id"], a["label"]));
                            }
                        }
                        Some("relation") => {
                            let p = Self::indexed(&mut counters, path, "relation");
                            let Some(a) = self.attrs(child, &p, &["kind", "from", "to"], &["label"]) else {
                                continue;
                            };
                            self.text_free(child, &p);
                            match a["kind"].parse() {
                                Ok(kind) => net.relations.push(ConceptRelation {
                                    kind,
                                    from: a["from"].to_string(),
                                    to: a["to"].to_string(),
                                    label: a.get("label").map(|s| s.to_string()),
                                }),
                                Err(msg) => self.issue(
                                    Code::BadRelationKind,
                                    &format!("{p}/@kind"),
                                    msg,
                                    child.offset,
                                ),
                            }
                        }
                        _ => self.unknown_element(child, path),
                    }
                }
                card.concept_network = Some(net);
            }
            SectionName::Statechart => {
                let mut states = Vec::new();
                let mut transitions = Vec::new();
                let mut initial: Option<String> = None;
                for child in children {
                    match plain_name(child) {
                        Some("state") => {
                            let p = Self::indexed(&mut counters, path, "state");
                            if let Some(a) = self.attrs(child, &p, &["id", "label"], &[]) {
                                self.text_free(child, &p);
                                states.push(State {
                                    id: a["id"].to_string(),
                                    label: a["label"].to_string(),
                                });
                            }
                        }
                        Some("initial") => {
                            let p = format!("{path}/initial");
                            if initial.is_some() {
                                self.issue(Code::DuplicateElement, &p, "<initial> appears twice", child.offset);
                                continue;
                            }
                            if let Some(a) = self.attrs(child, &p, &["ref"], &[]) {
                                self.text_free(child, &p);
                                initial = Some(a["ref"].to_string());
                            }
                        }
                        Some("transition") => {
                            let p = Self::indexed(&mut counters, path, "transition");
                            if let Some(a) = self.attrs(child, &p, &["from", "to", "event"], &[]) {
                                self.text_free(child, &p);
                                transitions.push(Transition {
                                    from: a["from"].to_string(),
                                    to: a["to"].to_string(),
                                    event: a["event"].to_string(),
                                });
                            }
                        }
                        _ => self.unknown_element(child, path),
                    }
                }
                match initial {
                    Some(initial) => {
                        card.statechart = Some(StateChart {
                            states,
                            initial,
                            transitions,
                        })
                    }
                    None => self.issue(
                        Code::MissingElement,
                        &format!("{path}/initial"),
                        "<statechart> requires <initial>",
                        el.offset,
                    ),
                }
            }
            SectionName::Collaboration => {
                let mut collab = Collaboration {
                    objects: Vec::new(),
                    messages: Vec::new(),
                };
                for child in children {
                    match plain_name(child) {
                        Some("object") => {
                            let p = Self::indexed(&mut counters, path, "object");
                            if let Some(a) = self.attrs(child, &p, &["id", "label"], &[]) {
                                self.text_free(child, &p);
                                collab.objects.push(CollaborationObject {
                                    id: a["id"].to_string(),
                                    label: a["label"].to_string(),
                                });
                            }
                        }
                        Some("message") => {
                            let p = Self::indexed(&mut counters, path, "message");
                            let Some(a) = self.attrs(child, &p, &["seq", "from", "to", "label"], &[]) else {
                                continue;
                            };
                            self.text_free(child, &p);
                            let seq = a["seq"];
                            let canonical = seq.parse::<u32>().ok().filter(|n| n.to_string() == seq);
                            match canonical {
                                Some(seq) => collab.messages.push(Message {
                                    seq,
                                    from: a["from"].to_string(),
                                    to: a["to"].to_string(),
                                    label: a["label"].to_string(),
                                }),
                                None => self.issue(
                                    Code::BadSeq,
                                    &format!("{p}/@seq"),
                                    format!("'{seq}' is not a sequence number"),
                                    child.offset,
                                ),
                            }
                        }
                        _ => self.unknown_element(child, path),
                    }
                }
                card.collaboration = Some(collab);
            }
            SectionName::Constraints => {
                let mut constraints = Vec::new();
                for child in children {
                    if plain_name(child) != Some("constraint") {
                        self.unknown_element(child, path);
                        continue;
                    }
                    let p = Self::indexed(&mut counters, path, "constraint");
                    self.attrs(child, &p, &[], &[]);
                    let source = self.text(child, &p);
                    match ConstraintAttachment::parse(source) {
                        Ok(c) => constraints.push(c),
                        Err(e) => {
                            let mut issue = Issue::new(Code::ConstraintParseError, &p, e.to_string());
                            issue.offset = e.offset();
                            self.issues.push(issue);
                        }
                    }
                }
                card.constraints = Some(constraints);
            }
            SectionName::Narrative => {
                let mut text = None;
                let mut figure_refs = Vec::new();
                for child in children {
                    match plain_name(child) {
                        Some("text") => {
                            let p = format!("{path}/text");
                            self.attrs(child, &p, &[], &[]);
                            if text.is_some() {
                                self.issue(Code::DuplicateElement, &p, "<text> appears twice", child.offset);
                                continue;
                            }
                            text = Some(self.text(child, &p));
                        }
                        Some("figure") => {
                            let p = Self::indexed(&mut counters, path, "figure");
                            if let Some(a) = self.attrs(child, &p, &["href"], &[]) {
                                self.text_free(child, &p);
                                figure_refs.push(a["href"].to_string());
                            }
                        }
                        _ => self.unknown_element(child, path),
                    }
                }
                match text {
                    Some(text) => card.narrative = Some(Narrative { text, figure_refs }),
                    None => self.issue(
                        Code::MissingElement,
                        &format!("{path}/text"),
                        "<narrative> requires <text>",
                        el.offset,
                    ),
                }
            }
        }
    }

    /// Empty elements: no children, no text.
    fn text_free(&mut self, el: &Element, path: &str) {
        for child in el.elements() {
            self.unknown_element(child, path);
        }
        if el.has_significant_text() {
            self.issue(
                Code::UnexpectedText,
                path,
                format!("<{}> must be empty", el.name.local),
                el.offset,
            );
        }
    }
}

fn placeholder_metadata() -> CardMetadata {
    CardMetadata {
        title: String::new(),
        creator: String::new(),
        date: NaiveDate::default(),
        description: None,
        language: None,
    }
}

fn parse_date(s: &str) -> Option<NaiveDate> {
    let b = s.as_bytes();
    let shape_ok = b.len() == 10
        && b[4] == b'-'
        && b[7] == b'-'
        && b.iter()
            .enumerate()
            .all(|(i, c)| i == 4 || i == 7 || c.is_ascii_digit());
    if !shape_ok {
        return None;
    }
    NaiveDate::parse_from_str(s, "%Y-%m-%d").ok()
}

fn malformed(e: crate::xml::XmlError) -> Report {
    Report::from(vec![
        Issue::new(Code::MalformedXml, "/", e.message).at_offset(e.offset)
    ])
}

/// Decodes a card document without running model validation.
fn decode(document: &str) -> Result<KnowledgeCard, Report> {
    let root = parse_document(document).map_err(malformed)?;
    let mut decoder = Decoder::default();
    match decoder.card(&root) {
        Some(card) if decoder.issues.is_empty() => Ok(card),
        _ => Err(Report::from(decoder.issues)),
    }
}

/// Parses and validates a card document.
pub fn parse_card(document: &str) -> Result<KnowledgeCard, CardXmlError> {
    let card = decode(document).map_err(CardXmlError::Schema)?;
    let report = validate_card(&card);
    if report.is_empty() {
        Ok(card)
    } else {
        Err(CardXmlError::Invalid(report))
    }
}

/// All schema findings for a document, followed by model-level findings
/// when the document is structurally sound. Never fails.
pub fn validate_against_schema(document: &str) -> Report {
    match decode(document) {
        Ok(card) => validate_card(&card),
        Err(report) => report,
    }
}

/// Decodes a standalone `<metadata>` element.
pub fn decode_metadata_element(el: &Element) -> Result<CardMetadata, Report> {
    let mut decoder = Decoder::default();
    if plain_name(el) != Some("metadata") {
        decoder.unknown_element(el, "");
        return Err(Report::from(decoder.issues));
    }
    match decoder.metadata(el, "/metadata") {
        Some(m) if decoder.issues.is_empty() => Ok(m),
        _ => Err(Report::from(decoder.issues)),
    }
}

/// Decodes a standalone section document (see [`section_document`]) into `card`.
pub fn decode_section_document(
    document: &str,
    section: SectionName,
    card: &mut KnowledgeCard,
) -> Result<(), Report> {
    let root = parse_document(document).map_err(malformed)?;
    decode_section_element(&root, section, card)
}

/// Decodes one section element into `card`.
pub fn decode_section_element(el: &Element, section: SectionName, card: &mut KnowledgeCard) -> Result<(), Report> {
    let mut decoder = Decoder::default();
    if plain_name(el) != Some(section.as_str()) {
        decoder.unknown_element(el, "");
    } else {
        decoder.section(el, section, &format!("/{section}"), card);
    }
    if decoder.issues.is_empty() {
        Ok(())
    } else {
        Err(Report::from(decoder.issues))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::*;

    fn lexicon_card() -> KnowledgeCard {
        let mut card = build_pen_lexicon_fixture();
        card.lexicon = Some(vec![LexiconEntry::new("Cap", "removable lead protection part")]);
        card
    }

    #[test]
    fn lexicon_entry_element() {
        let xml = serialize_card(&lexicon_card()).unwrap();
        assert!(xml.contains("<entry term=\"Cap\">"), "{xml}");
        assert!(xml.contains("<definition>removable lead protection part</definition>"));
    }

    #[test]
    fn lead_protection_network_elements() {
        let xml = serialize_card(&build_lead_protection_fixture()).unwrap();
        assert_eq!(xml.matches("<concept ").count(), 5);
        assert_eq!(xml.matches("<relation ").count(), 4);
        assert!(xml.contains(
            "<relation kind=\"composition\" from=\"Cap\" to=\"Closer\"/>"
        ));
    }

    #[test]
    fn invalid_card_is_refused() {
        let mut card = lexicon_card();
        card.lexicon = None;
        match serialize_card(&card) {
            Err(CardXmlError::Invalid(r)) => assert_eq!(r.codes(), vec![Code::MissingSection]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trips_corpus() {
        for card in pen_corpus() {
            let xml = serialize_card(&card).unwrap();
            assert_eq!(parse_card(&xml).unwrap(), card, "{}", card.id);
            assert!(validate_against_schema(&xml).is_empty());
        }
    }

    #[test]
    fn canonical_document_layout() {
        let xml = serialize_card(&build_lead_protection_fixture()).unwrap();
        let expected = r#"<?xml version="1.0" encoding="UTF-8"?>
<knowledge-card id="lead_protection" kind="vocabulary.semantics" version="1">
  <metadata>
    <title>Lead_protection network</title>
    <creator>CYGMA knowledge book</creator>
    <date>2004-03-15</date>
    <description>Elements that compose a lead protection</description>
    <language>en</language>
  </metadata>
  <concept-network>
    <concept id="Lead_protection" label="Lead_protection"/>
    <concept id="mecanism" label="mecanism"/>
    <concept id="Cap" label="Cap"/>
    <concept id="Closer" label="Closer"/>
    <concept id="clip" label="clip"/>
    <relation kind="aggregation" from="Lead_protection" to="mecanism"/>
    <relation kind="aggregation" from="Lead_protection" to="Cap"/>
    <relation kind="composition" from="Cap" to="Closer"/>
    <relation kind="composition" from="Cap" to="clip"/>
  </concept-network>
</knowledge-card>
"#;
        assert_eq!(xml, expected);
    }

    fn doc_with(kind: &str, body: &str) -> String {
        format!(
            "<knowledge-card id=\"c\" kind=\"{kind}\" version=\"1\">\
             <metadata><title>t</title><creator>c</creator><date>2020-01-31</date></metadata>\
             {body}</knowledge-card>"
        )
    }

    fn first_code(doc: &str) -> Code {
        match parse_card(doc) {
            Err(e) => e.report().issues[0].code,
            Ok(_) => panic!("accepted: {doc}"),
        }
    }

    #[test]
    fn rejects_unknown_kind() {
        let doc = doc_with(
            "vocabulary.dictionary",
            "<lexicon><entry term=\"a\"><definition>b</definition></entry></lexicon>",
        );
        assert_eq!(first_code(&doc), Code::BadKind);
    }

    #[test]
    fn rejects_duplicate_section() {
        let lex = "<lexicon><entry term=\"a\"><definition>b</definition></entry></lexicon>";
        let doc = doc_with("vocabulary.lexicon", &format!("{lex}{lex}"));
        assert_eq!(first_code(&doc), Code::DuplicateSection);
    }

    #[test]
    fn strictness() {
        let lex = "<lexicon><entry term=\"a\"><definition>b</definition></entry></lexicon>";
        assert_eq!(
            first_code(&doc_with("vocabulary.lexicon", &format!("{lex}<extra/>"))),
            Code::UnknownElement
        );
        assert_eq!(
            first_code(&doc_with(
                "vocabulary.lexicon",
                "<lexicon><entry term=\"a\" lang=\"x\"><definition>b</definition></entry></lexicon>"
            )),
            Code::UnknownAttribute
        );
        assert_eq!(
            first_code(&doc_with(
                "vocabulary.lexicon",
                "<lexicon><entry><definition>b</definition></entry></lexicon>"
            )),
            Code::MissingAttribute
        );
        assert_eq!(
            first_code(&doc_with("vocabulary.lexicon", &format!("stray{lex}"))),
            Code::UnexpectedText
        );
        assert_eq!(first_code("<knowledge-card"), Code::MalformedXml);
        let bad_date = doc_with("vocabulary.lexicon", lex).replace("2020-01-31", "2020-02-30");
        assert_eq!(first_code(&bad_date), Code::BadDate);
        let bad_version = doc_with("vocabulary.lexicon", lex).replace("version=\"1\"", "version=\"2\"");
        assert_eq!(first_code(&bad_version), Code::BadVersion);
        let ns = doc_with("vocabulary.lexicon", lex)
            .replace("<knowledge-card ", "<k:knowledge-card xmlns:k=\"urn:k\" ")
            .replace("</knowledge-card>", "</k:knowledge-card>");
        assert_eq!(first_code(&ns), Code::UnknownElement);
    }

    #[test]
    fn model_rules_apply_after_decoding() {
        let doc = doc_with("vocabulary.lexicon", "");
        match parse_card(&doc) {
            Err(CardXmlError::Invalid(r)) => assert_eq!(r.codes(), vec![Code::MissingSection]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn relation_kind_is_closed() {
        let doc = doc_with(
            "vocabulary.semantics",
            "<concept-network><concept id=\"a\" label=\"a\"/><concept id=\"b\" label=\"b\"/>\
             <relation kind=\"uses\" from=\"a\" to=\"b\"/></concept-network>",
        );
        let report = validate_against_schema(&doc);
        assert_eq!(report.codes(), vec![Code::BadRelationKind]);
    }

    #[test]
    fn constraint_parse_error_carries_offset() {
        let doc = doc_with(
            "appraise.payment",
            "<constraints><constraint>context x inv : a = (b</constraint></constraints>\
             <narrative><text>t</text></narrative>",
        );
        let report = validate_against_schema(&doc);
        assert_eq!(report.codes(), vec![Code::ConstraintParseError]);
        assert_eq!(report.issues[0].offset, Some(22));
    }

    #[test]
    fn comparison_operators_survive_cdata() {
        let mut card = build_interior_diameter_fixture();
        card.constraints
            .as_mut()
            .unwrap()
            .push(ConstraintAttachment::parse("context d inv : d <> 0 and d >= 1").unwrap());
        let xml = serialize_card(&card).unwrap();
        assert!(xml.contains("<![CDATA[context d inv : d <> 0 and d >= 1]]>"));
        assert_eq!(parse_card(&xml).unwrap(), card);
    }

    #[test]
    fn illegal_characters_refused() {
        let mut card = lexicon_card();
        card.metadata.title = "bell\u{7}".into();
        match serialize_card(&card) {
            Err(CardXmlError::Invalid(r)) => assert_eq!(r.codes(), vec![Code::IllegalCharacter]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn section_documents_decode_back() {
        let card = build_ink_leak_fixture();
        let mut rebuilt = KnowledgeCard::new(card.id.clone(), card.kind, card.metadata.clone());
        for section in card.sections() {
            let doc = section_document(&card, section).unwrap();
            decode_section_document(&doc, section, &mut rebuilt).unwrap();
        }
        assert_eq!(rebuilt, card);
        assert!(section_document(&card, SectionName::Lexicon).is_none());
    }
}
