//! A small namespace-resolving element tree over quick-xml, plus escaping
//! helpers for the hand-written serializers.

use std::collections::HashMap;

use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;
use thiserror::Error;

pub const XML_NS: &str = "http://www.w3.org/XML/1998/namespace";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed XML at offset {offset}: {message}")]
pub struct XmlError {
    /// Character offset into the document.
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QName {
    pub prefix: Option<String>,
    pub local: String,
    pub namespace: Option<String>,
}

impl QName {
    pub fn is(&self, namespace: Option<&str>, local: &str) -> bool {
        self.namespace.as_deref() == namespace && self.local == local
    }

    /// The name as written in the document.
    pub fn qualified(&self) -> String {
        match &self.prefix {
            Some(p) => format!("{p}:{}", self.local),
            None => self.local.clone(),
        }
    }

    /// Namespace IRI followed by the local name.
    pub fn expanded(&self) -> String {
        format!("{}{}", self.namespace.as_deref().unwrap_or(""), self.local)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attribute {
    pub name: QName,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Element(Element),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub name: QName,
    pub attributes: Vec<Attribute>,
    /// Namespace declarations made on this element (prefix, IRI); the
    /// default namespace has an empty prefix.
    pub namespace_decls: Vec<(String, String)>,
    pub children: Vec<Node>,
    /// Character offset of the start tag.
    pub offset: usize,
}

impl Element {
    pub fn attr(&self, namespace: Option<&str>, local: &str) -> Option<&str> {
        self.attributes
            .iter()
            .find(|a| a.name.is(namespace, local))
            .map(|a| a.value.as_str())
    }

    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.children.iter().filter_map(|n| match n {
            Node::Element(e) => Some(e),
            Node::Text(_) => None,
        })
    }

    /// Concatenated text children.
    pub fn text(&self) -> String {
        self.children
            .iter()
            .filter_map(|n| match n {
                Node::Text(t) => Some(t.as_str()),
                Node::Element(_) => None,
            })
            .collect()
    }

    pub fn has_element_children(&self) -> bool {
        self.elements().next().is_some()
    }

    /// Text that is not just indentation between child elements.
    pub fn has_significant_text(&self) -> bool {
        self.children
            .iter()
            .any(|n| matches!(n, Node::Text(t) if !t.trim().is_empty()))
    }
}

struct Builder<'a> {
    source: &'a str,
    scopes: Vec<HashMap<String, String>>,
    stack: Vec<Element>,
    root: Option<Element>,
}

impl<'a> Builder<'a> {
    fn char_offset(&self, byte: usize) -> usize {
        let byte = byte.min(self.source.len());
        let mut b = byte;
        while !self.source.is_char_boundary(b) {
            b -= 1;
        }
        self.source[..b].chars().count()
    }

    fn error(&self, byte: usize, message: impl Into<String>) -> XmlError {
        XmlError {
            offset: self.char_offset(byte),
            message: message.into(),
        }
    }

    fn lookup(&self, prefix: &str) -> Option<String> {
        if prefix == "xml" {
            return Some(XML_NS.to_string());
        }
        self.scopes.iter().rev().find_map(|s| s.get(prefix).cloned())
    }

    fn split(raw: &str) -> (Option<&str>, &str) {
        match raw.split_once(':') {
            Some((p, l)) => (Some(p), l),
            None => (None, raw),
        }
    }

    fn open(&mut self, start: &BytesStart, byte: usize) -> Result<Element, XmlError> {
        let raw_name = std::str::from_utf8(start.name().as_ref())
            .map_err(|_| self.error(byte, "element name is not UTF-8"))?
            .to_string();

        let mut scope = HashMap::new();
        let mut namespace_decls = Vec::new();
        let mut pending = Vec::new();
        for attr in start.attributes().with_checks(true) {
            let attr = attr.map_err(|e| self.error(byte, e.to_string()))?;
            let key = std::str::from_utf8(attr.key.as_ref())
                .map_err(|_| self.error(byte, "attribute name is not UTF-8"))?
                .to_string();
            let value = attr
                .unescape_value()
                .map_err(|e| self.error(byte, e.to_string()))?
                .into_owned();
            if key == "xmlns" {
                scope.insert(String::new(), value.clone());
                namespace_decls.push((String::new(), value));
            } else if let Some(prefix) = key.strip_prefix("xmlns:") {
                scope.insert(prefix.to_string(), value.clone());
                namespace_decls.push((prefix.to_string(), value));
            } else {
                pending.push((key, value));
            }
        }
        self.scopes.push(scope);

        let (prefix, local) = Self::split(&raw_name);
        let namespace = match prefix {
            Some(p) => Some(
                self.lookup(p)
                    .ok_or_else(|| self.error(byte, format!("undeclared prefix '{p}'")))?,
            ),
            None => self.lookup("").filter(|ns| !ns.is_empty()),
        };
        let name = QName {
            prefix: prefix.map(str::to_string),
            local: local.to_string(),
            namespace,
        };

        let mut attributes = Vec::new();
        for (key, value) in pending {
            let (prefix, local) = Self::split(&key);
            let namespace = match prefix {
                Some(p) => Some(
                    self.lookup(p)
                        .ok_or_else(|| self.error(byte, format!("undeclared prefix '{p}'")))?,
                ),
                None => None,
            };
            attributes.push(Attribute {
                name: QName {
                    prefix: prefix.map(str::to_string),
                    local: local.to_string(),
                    namespace,
                },
                value,
            });
        }

        Ok(Element {
            name,
            attributes,
            namespace_decls,
            children: Vec::new(),
            offset: self.char_offset(byte),
        })
    }

    fn close(&mut self, element: Element, byte: usize) -> Result<(), XmlError> {
        self.scopes.pop();
        match self.stack.last_mut() {
            Some(parent) => parent.children.push(Node::Element(element)),
            None if self.root.is_none() => self.root = Some(element),
            None => return Err(self.error(byte, "more than one root element")),
        }
        Ok(())
    }

    fn text(&mut self, text: String, byte: usize) -> Result<(), XmlError> {
        match self.stack.last_mut() {
            Some(parent) => {
                if let Some(Node::Text(prev)) = parent.children.last_mut() {
                    prev.push_str(&text);
                } else {
                    parent.children.push(Node::Text(text));
                }
                Ok(())
            }
            None if text.trim().is_empty() => Ok(()),
            None => Err(self.error(byte, "text outside the root element")),
        }
    }
}

/// Parses a complete document and returns its root element.
pub fn parse_document(source: &str) -> Result<Element, XmlError> {
    let mut reader = Reader::from_str(source);
    reader.config_mut().trim_text(false);
    let mut b = Builder {
        source,
        scopes: Vec::new(),
        stack: Vec::new(),
        root: None,
    };

    loop {
        let pos = reader.buffer_position() as usize;
        let event = reader.read_event().map_err(|e| {
            let at = reader.error_position() as usize;
            b.error(at, e.to_string())
        })?;
        match event {
            Event::Start(start) => {
                if b.stack.is_empty() && b.root.is_some() {
                    return Err(b.error(pos, "more than one root element"));
                }
                let el = b.open(&start, pos)?;
                b.stack.push(el);
            }
            Event::Empty(start) => {
                if b.stack.is_empty() && b.root.is_some() {
                    return Err(b.error(pos, "more than one root element"));
                }
                let el = b.open(&start, pos)?;
                b.close(el, pos)?;
            }
            Event::End(_) => {
                let el = b.stack.pop().ok_or_else(|| b.error(pos, "unbalanced end tag"))?;
                b.close(el, pos)?;
            }
            Event::Text(t) => {
                let text = t.unescape().map_err(|e| b.error(pos, e.to_string()))?;
                b.text(text.into_owned(), pos)?;
            }
            Event::CData(c) => {
                let text = std::str::from_utf8(&c.into_inner())
                    .map_err(|_| b.error(pos, "CDATA is not UTF-8"))?
                    .to_string();
                b.text(text, pos)?;
            }
            Event::DocType(_) => return Err(b.error(pos, "document type declarations are not supported")),
            Event::Decl(_) | Event::Comment(_) | Event::PI(_) => {}
            Event::Eof => break,
        }
    }

    if !b.stack.is_empty() {
        return Err(b.error(source.len(), "unexpected end of document"));
    }
    let no_root = b.error(0, "no root element");
    b.root.ok_or(no_root)
}

/// Characters allowed in XML 1.0 documents.
pub fn is_xml_char(c: char) -> bool {
    matches!(c, '\t' | '\n' | '\r' | '\u{20}'..='\u{D7FF}' | '\u{E000}'..='\u{FFFD}' | '\u{10000}'..='\u{10FFFF}')
}

/// Escapes character data. `\r` is written as a reference so it survives
/// end-of-line normalisation in other parsers.
pub fn escape_text(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '\r' => out.push_str("&#13;"),
            c => out.push(c),
        }
    }
    out
}

/// Escapes an attribute value for double quotes, protecting whitespace
/// characters from attribute-value normalisation.
pub fn escape_attr(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\t' => out.push_str("&#9;"),
            '\n' => out.push_str("&#10;"),
            '\r' => out.push_str("&#13;"),
            c => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_prefixes_and_default_namespace() {
        let doc = r#"<?xml version="1.0"?>
<r:root xmlns:r="urn:r" xmlns="urn:d" a="1" r:b="2"><child xml:lang="fr">x &amp; y</child></r:root>"#;
        let root = parse_document(doc).unwrap();
        assert!(root.name.is(Some("urn:r"), "root"));
        assert_eq!(root.attr(None, "a"), Some("1"));
        assert_eq!(root.attr(Some("urn:r"), "b"), Some("2"));
        let child = root.elements().next().unwrap();
        assert!(child.name.is(Some("urn:d"), "child"));
        assert_eq!(child.attr(Some(XML_NS), "lang"), Some("fr"));
        assert_eq!(child.text(), "x & y");
    }

    #[test]
    fn cdata_and_text_merge() {
        let root = parse_document("<a>1 <![CDATA[< 2]]> 3</a>").unwrap();
        assert_eq!(root.text(), "1 < 2 3");
    }

    #[test]
    fn malformed_documents() {
        for doc in [
            "<a><b></a>",
            "<a>",
            "<a/><b/>",
            "text<a/>",
            "<p:a/>",
            "<a x='1' x='2'/>",
            "",
            "<a>&bogus;</a>",
        ] {
            assert!(parse_document(doc).is_err(), "{doc:?}");
        }
    }

    #[test]
    fn escaping_round_trips() {
        let nasty = "a<b>&\"c\"\r\n\td";
        let doc = format!("<x v=\"{}\">{}</x>", escape_attr(nasty), escape_text(nasty));
        let root = parse_document(&doc).unwrap();
        assert_eq!(root.attr(None, "v"), Some(nasty));
        assert_eq!(root.text(), nasty);
    }
}
