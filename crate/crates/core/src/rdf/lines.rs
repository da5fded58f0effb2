//! One triple per line: subject, predicate and object separated by tabs.
//! IRIs are written `<http://localhost/Cap>`, blank nodes `_:label`, and
//! literals `"text"` or `"text"@lang` with `\\`, `\"`, `\n`, `\r`, `\t`
//! escapes.
//!
//! Lines that are empty or start with `#` are skipped.

use std::fmt::Write as _;

use super::term::{Iri, Literal, Subject, Term, Triple};
use super::RdfError;

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out
}

pub fn format_term(term: &Term) -> String {
    match term {
        Term::Iri(i) => format!("<{i}>"),
        Term::Blank(b) => format!("_:{b}"),
        Term::Literal(l) => match &l.lang {
            Some(lang) => format!("\"{}\"@{lang}", escape(&l.lexical)),
            None => format!("\"{}\"", escape(&l.lexical)),
        },
    }
}

pub fn format_triple(t: &Triple) -> String {
    format!(
        "{}\t<{}>\t{}",
        format_term(&t.subject.clone().into()),
        t.predicate,
        format_term(&t.object)
    )
}

pub fn write_lines<'a>(triples: impl IntoIterator<Item = &'a Triple>) -> String {
    let mut out = String::new();
    for t in triples {
        let _ = writeln!(out, "{}", format_triple(t));
    }
    out
}

fn parse_term(text: &str) -> Result<Term, String> {
    if let Some(inner) = text.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
        return Iri::new(inner).map(Term::Iri).map_err(|e| e.to_string());
    }
    if let Some(id) = text.strip_prefix("_:") {
        if id.is_empty() || id.chars().any(|c| c.is_whitespace()) {
            return Err(format!("bad blank node label {text:?}"));
        }
        return Ok(Term::Blank(id.to_string()));
    }
    if let Some(rest) = text.strip_prefix('"') {
        let mut lexical = String::new();
        let mut chars = rest.char_indices();
        while let Some((i, c)) = chars.next() {
            match c {
                '"' => {
                    let tail = &rest[i + 1..];
                    let lang = match tail {
                        "" => None,
                        t if t.len() > 1 && t.starts_with('@') => Some(t[1..].to_string()),
                        _ => return Err(format!("unexpected {tail:?} after literal")),
                    };
                    return Ok(Term::Literal(Literal { lexical, lang }));
                }
                '\\' => match chars.next().map(|(_, c)| c) {
                    Some('\\') => lexical.push('\\'),
                    Some('"') => lexical.push('"'),
                    Some('n') => lexical.push('\n'),
                    Some('r') => lexical.push('\r'),
                    Some('t') => lexical.push('\t'),
                    other => return Err(format!("bad escape \\{}", other.unwrap_or(' '))),
                },
                c => lexical.push(c),
            }
        }
        return Err("unterminated literal".into());
    }
    Err(format!("cannot read term {text:?}"))
}

pub fn parse_lines(text: &str) -> Result<Vec<Triple>, RdfError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| RdfError::Line { line: n + 1, message };
        let fields: Vec<&str> = line.split('\t').collect();
        let [s, p, o] = fields[..] else {
            return Err(err(format!("expected 3 tab-separated fields, found {}", fields.len())));
        };
        let triple = Triple::from_terms(parse_term(s).map_err(err)?, parse_term(p).map_err(err)?, parse_term(o).map_err(err)?)
            .map_err(|e| RdfError::Line {
                line: n + 1,
                message: e.to_string(),
            })?;
        out.push(triple);
    }
    Ok(out)
}

/// Subject as it appears in line form.
pub fn format_subject(s: &Subject) -> String {
    format_term(&s.clone().into())
}
