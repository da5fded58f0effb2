//! On-disk record formats and the lifting of cards to RDF.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cardxml::{decode_metadata_element, decode_section_element, write_metadata, write_section, XML_DECL};
use crate::model::{CardKind, CardMetadata, KnowledgeCard, SectionName};
use crate::rdf::{Iri, Literal, Subject, Term, Triple};
use crate::xml::{escape_attr, parse_document, Element};

pub const METADATA_DIR: &str = "metadata";
pub const SECTIONS_DIR: &str = "sections";
pub const RDF_DIR: &str = "rdf";
pub const LINKS_FILE: &str = "rdf/links.nt";
pub const SCHEMA_FILE: &str = "rdf/schema.rdf";

pub fn metadata_path(id: &str) -> String {
    format!("{METADATA_DIR}/{id}.xml")
}

pub fn section_repository(section: SectionName) -> String {
    format!("{SECTIONS_DIR}/{section}")
}

pub fn section_path(section: SectionName, id: &str) -> String {
    format!("{SECTIONS_DIR}/{section}/{id}.xml")
}

/// The metadata repository's record for one card.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetadataRecord {
    pub id: String,
    pub kind: CardKind,
    /// Registration order; kept across overwrites.
    pub seq: u64,
    pub metadata: CardMetadata,
    pub sections: Vec<SectionName>,
}

pub fn encode_metadata_record(rec: &MetadataRecord) -> String {
    let mut out = String::from(XML_DECL);
    let _ = writeln!(
        out,
        "<card-record id=\"{}\" kind=\"{}\" seq=\"{}\">",
        escape_attr(&rec.id),
        rec.kind,
        rec.seq
    );
    write_metadata(&mut out, &rec.metadata, 1);
    for s in &rec.sections {
        let _ = writeln!(out, "  <section name=\"{s}\"/>");
    }
    out.push_str("</card-record>\n");
    out
}

pub fn decode_metadata_record(text: &str) -> Result<MetadataRecord, String> {
    let root = parse_document(text).map_err(|e| e.to_string())?;
    if root.name.local != "card-record" {
        return Err(format!("unexpected root <{}>", root.name.local));
    }
    let attr = |name: &str| root.attr(None, name).ok_or(format!("missing attribute '{name}'"));
    let id = attr("id")?.to_string();
    let kind: CardKind = attr("kind")?.parse().map_err(|e| format!("{e}"))?;
    let seq: u64 = attr("seq")?.parse().map_err(|e| format!("bad seq: {e}"))?;
    let mut metadata = None;
    let mut sections = Vec::new();
    for child in root.elements() {
        match child.name.local.as_str() {
            "metadata" => {
                metadata = Some(decode_metadata_element(child).map_err(|r| r.to_string())?);
            }
            "section" => {
                let name = child.attr(None, "name").ok_or("section without a name")?;
                sections.push(name.parse::<SectionName>().map_err(|e| e.to_string())?);
            }
            other => return Err(format!("unexpected <{other}>")),
        }
    }
    Ok(MetadataRecord {
        id,
        kind,
        seq,
        metadata: metadata.ok_or("missing <metadata>")?,
        sections,
    })
}

/// A section record: the section element wrapped with its owner.
pub fn encode_section_record(card: &KnowledgeCard, section: SectionName) -> Option<String> {
    let mut body = String::new();
    if !write_section(&mut body, card, section, 1) {
        return None;
    }
    Some(format!(
        "{XML_DECL}<section-record card=\"{}\" section=\"{section}\">\n{body}</section-record>\n",
        escape_attr(&card.id)
    ))
}

/// Decodes a section record into `card`, checking that it belongs there.
pub fn decode_section_record(text: &str, section: SectionName, card: &mut KnowledgeCard) -> Result<(), String> {
    let root = parse_document(text).map_err(|e| e.to_string())?;
    if root.name.local != "section-record" {
        return Err(format!("unexpected root <{}>", root.name.local));
    }
    if root.attr(None, "card") != Some(card.id.as_str()) {
        return Err(format!("record is not owned by card '{}'", card.id));
    }
    if root.attr(None, "section") != Some(section.as_str()) {
        return Err(format!("record does not hold section '{section}'"));
    }
    let inner: Vec<&Element> = root.elements().collect();
    let [el] = inner[..] else {
        return Err("a section record holds exactly one section".into());
    };
    decode_section_element(el, section, card).map_err(|r| r.to_string())
}

/// IRI of the document resource that carries a card's Dublin Core triples.
pub fn card_resource(base: &str, id: &str) -> Iri {
    Iri::new(format!("{base}cards/{id}")).expect("base is absolute")
}

pub fn concept_resource(base: &str, concept: &str) -> Iri {
    Iri::new(format!("{base}{concept}")).expect("base is absolute")
}

/// Bag node label for one `(subject, kind)` group of a card.
pub fn bag_label(card_id: &str, from: &str, kind: &str) -> String {
    format!("{card_id}.{from}.{kind}")
}

/// Every triple a card contributes: Dublin Core fields on the card resource,
/// and its concept relations grouped into one Bag per subject and kind.
pub fn card_triples(card: &KnowledgeCard, base: &str) -> Vec<Triple> {
    let doc = card_resource(base, &card.id);
    let m = &card.metadata;
    let mut out = vec![
        Triple::new(doc.clone(), Iri::dc("title"), Literal::plain(&m.title)),
        Triple::new(doc.clone(), Iri::dc("creator"), Literal::plain(&m.creator)),
        Triple::new(doc, Iri::dc("date"), Literal::plain(m.date.format("%Y-%m-%d").to_string())),
    ];

    let Some(net) = &card.concept_network else { return out };
    let mut groups: Vec<((&str, &str), Vec<&str>)> = Vec::new();
    let mut position: BTreeMap<(&str, &str), usize> = BTreeMap::new();
    for r in &net.relations {
        let key = (r.from.as_str(), r.kind.as_str());
        let i = *position.entry(key).or_insert_with(|| {
            groups.push((key, Vec::new()));
            groups.len() - 1
        });
        groups[i].1.push(r.to.as_str());
    }
    for ((from, kind), members) in groups {
        let bag = Subject::Blank(bag_label(&card.id, from, kind));
        out.push(Triple::new(concept_resource(base, from), Iri::lb(kind), Term::from(bag.clone())));
        out.push(Triple::new(bag.clone(), Iri::rdf("type"), Iri::rdf("Bag")));
        for (n, to) in members.into_iter().enumerate() {
            out.push(Triple::new(bag.clone(), Iri::member(n + 1), concept_resource(base, to)));
        }
    }
    out
}
