//! Transform profiles: the representations a card can be viewed in.

use knowcard_core::cardxml::serialize_card;
use knowcard_core::model::KnowledgeCard;
use serde_json::Value;

use crate::app::ApiError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    RawXml,
    Json,
    Html,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::RawXml, Profile::Json, Profile::Html];

    pub fn name(self) -> &'static str {
        match self {
            Profile::RawXml => "raw-xml",
            Profile::Json => "json",
            Profile::Html => "html",
        }
    }

    pub fn content_type(self) -> &'static str {
        match self {
            Profile::RawXml => "application/xml; charset=utf-8",
            Profile::Json => "application/json",
            Profile::Html => "text/html; charset=utf-8",
        }
    }

    pub fn from_name(name: &str) -> Option<Profile> {
        Profile::ALL.into_iter().find(|p| p.name() == name)
    }

    fn from_media_type(media: &str) -> Option<Profile> {
        match media {
            "application/xml" | "text/xml" | "*/*" | "application/*" => Some(Profile::RawXml),
            "application/json" => Some(Profile::Json),
            "text/html" | "text/*" => Some(Profile::Html),
            _ => None,
        }
    }

    /// The `profile` query parameter wins; otherwise the acceptable media
    /// type with the highest quality picks the profile. No preference at
    /// all means raw XML.
    pub fn negotiate(query: Option<&str>, accept: Option<&str>) -> Result<Profile, ApiError> {
        if let Some(name) = query {
            return Profile::from_name(name).ok_or_else(|| not_acceptable(format!("unknown profile '{name}'")));
        }
        let Some(accept) = accept.map(str::trim).filter(|a| !a.is_empty()) else {
            return Ok(Profile::RawXml);
        };
        let mut best: Option<(f32, Profile)> = None;
        for range in accept.split(',') {
            let mut parts = range.split(';').map(str::trim);
            let media = parts.next().unwrap_or("").to_ascii_lowercase();
            let q = parts
                .filter_map(|p| p.strip_prefix("q="))
                .find_map(|q| q.parse::<f32>().ok())
                .unwrap_or(1.0);
            if q <= 0.0 {
                continue;
            }
            if let Some(profile) = Profile::from_media_type(&media) {
                if best.is_none_or(|(bq, _)| q > bq) {
                    best = Some((q, profile));
                }
            }
        }
        best.map(|(_, p)| p)
            .ok_or_else(|| not_acceptable(format!("no profile matches Accept: {accept}")))
    }
}

fn not_acceptable(message: String) -> ApiError {
    let names: Vec<&str> = Profile::ALL.iter().map(|p| p.name()).collect();
    ApiError::new(406, "NOT_ACCEPTABLE", message).with_detail(names.into())
}

pub fn render(card: &KnowledgeCard, profile: Profile) -> Result<String, ApiError> {
    match profile {
        Profile::RawXml => {
            serialize_card(card).map_err(|e| ApiError::new(500, "STORAGE_IO", format!("stored card is invalid: {e}")))
        }
        Profile::Json => Ok(to_json(card)),
        Profile::Html => Ok(to_html(card)),
    }
}

pub fn to_json(card: &KnowledgeCard) -> String {
    serde_json::to_string_pretty(card).expect("cards serialize to JSON")
}

/// Every field of the card as nested definition lists. Text is escaped so
/// that an HTML parser recovers it exactly, carriage returns included.
pub fn to_html(card: &KnowledgeCard) -> String {
    let value = serde_json::to_value(card).expect("cards serialize to JSON");
    let mut out = String::from("<!DOCTYPE html>\n<html");
    if let Some(lang) = &card.metadata.language {
        out.push_str(" lang=\"");
        escape_into(&mut out, lang);
        out.push('"');
    }
    out.push_str(">\n<head>\n<meta charset=\"utf-8\">\n<title>");
    escape_into(&mut out, &card.metadata.title);
    out.push_str("</title>\n</head>\n<body>\n<article class=\"knowledge-card\" id=\"");
    escape_into(&mut out, &card.id);
    out.push_str("\">\n");
    write_value(&mut out, &value);
    out.push_str("</article>\n</body>\n</html>\n");
    out
}

fn write_value(out: &mut String, value: &Value) {
    match value {
        Value::Object(fields) => {
            out.push_str("<dl>\n");
            for (key, v) in fields {
                out.push_str("<dt>");
                escape_into(out, key);
                out.push_str("</dt>\n<dd data-field=\"");
                escape_into(out, key);
                out.push_str("\">");
                write_value(out, v);
                out.push_str("</dd>\n");
            }
            out.push_str("</dl>\n");
        }
        Value::Array(items) => {
            out.push_str("<ol>\n");
            for item in items {
                out.push_str("<li>");
                write_value(out, item);
                out.push_str("</li>\n");
            }
            out.push_str("</ol>\n");
        }
        Value::String(s) => {
            out.push_str("<span class=\"text\">");
            escape_into(out, s);
            out.push_str("</span>");
        }
        Value::Null => out.push_str("<span class=\"null\"></span>"),
        other => {
            out.push_str("<data value=\"");
            out.push_str(&other.to_string());
            out.push_str("\">");
            out.push_str(&other.to_string());
            out.push_str("</data>");
        }
    }
}

pub fn escape_into(out: &mut String, text: &str) {
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            '\r' => out.push_str("&#13;"),
            c => out.push(c),
        }
    }
}
