use std::fmt;

use super::OclError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Number,
    Op,
    LParen,
    RParen,
    Comma,
    Keyword,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TokenKind::Ident => "IDENT",
            TokenKind::Number => "NUMBER",
            TokenKind::Op => "OP",
            TokenKind::LParen => "LPAREN",
            TokenKind::RParen => "RPAREN",
            TokenKind::Comma => "COMMA",
            TokenKind::Keyword => "KEYWORD",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Character index (not byte index) of the first character.
    pub offset: usize,
}

impl Token {
    /// Offset one past the last character.
    pub fn end(&self) -> usize {
        self.offset + self.lexeme.chars().count()
    }

    pub fn is_op(&self, op: &str) -> bool {
        self.kind == TokenKind::Op && self.lexeme == op
    }

    pub fn is_keyword(&self, kw: &str) -> bool {
        self.kind == TokenKind::Keyword && self.lexeme == kw
    }
}

pub const KEYWORDS: [&str; 7] = ["context", "inv", "and", "or", "not", "true", "false"];

/// Splits constraint text into tokens. Keywords are lower case only;
/// function names come out as plain identifiers and are resolved by the parser.
pub fn tokenize(source: &str) -> Result<Vec<Token>, OclError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = if c.is_ascii_digit() {
            i = scan_number(&chars, i)?;
            TokenKind::Number
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if KEYWORDS.contains(&word.as_str()) {
                TokenKind::Keyword
            } else {
                TokenKind::Ident
            }
        } else {
            i += 1;
            match c {
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                ',' => TokenKind::Comma,
                '+' | '-' | '*' | '/' | '=' | ':' => TokenKind::Op,
                '<' => {
                    if matches!(chars.get(i), Some('=') | Some('>')) {
                        i += 1;
                    }
                    TokenKind::Op
                }
                '>' => {
                    if chars.get(i) == Some(&'=') {
                        i += 1;
                    }
                    TokenKind::Op
                }
                _ => return Err(OclError::IllegalChar { offset: start, ch: c }),
            }
        };
        tokens.push(Token {
            kind,
            lexeme: chars[start..i].iter().collect(),
            offset: start,
        });
    }
    Ok(tokens)
}

// digits ('.' digits)? ([eE] [+-]? digits)?
fn scan_number(chars: &[char], mut i: usize) -> Result<usize, OclError> {
    let start = i;
    let digits = |chars: &[char], mut j: usize| {
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    i = digits(chars, i);
    if chars.get(i) == Some(&'.') {
        i += 1;
        if !chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
            return Err(OclError::MalformedNumber { offset: i });
        }
        i = digits(chars, i);
    }
    if matches!(chars.get(i), Some('e') | Some('E')) {
        i += 1;
        if matches!(chars.get(i), Some('+') | Some('-')) {
            i += 1;
        }
        if !chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
            return Err(OclError::MalformedNumber { offset: i });
        }
        i = digits(chars, i);
    }
    let text: String = chars[start..i].iter().collect();
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(i),
        _ => Err(OclError::MalformedNumber { offset: start }),
    }
}
