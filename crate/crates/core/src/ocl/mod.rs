//! The constraint language: named invariants over numeric parameters with
//! arithmetic, comparison, logic and a handful of functions.
//!
//! ```text
//! context interior_diameter inv :
//!   interior_diameter = external_tip_diameter + 2 * (cone_length * SIN(cone_angle))
//! ```

mod ast;
mod bindings;
mod eval;
mod lexer;
mod parser;
mod types;

pub use ast::{BinaryOp, ConstraintDef, Expr, ExprKind, Func, Span, UnaryOp};
pub use bindings::parse_bindings;
pub use eval::{check_invariant, evaluate, evaluate_with, AngleUnit, CheckReport, Env, Tolerance, Value};
pub use lexer::{tokenize, Token, TokenKind, KEYWORDS};
pub use parser::{parse_constraint, parse_expression, parse_expression_str};
pub use types::{check_types, Type};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OclError {
    #[error("illegal character {ch:?} at offset {offset}")]
    IllegalChar { offset: usize, ch: char },
    #[error("malformed number at offset {offset}")]
    MalformedNumber { offset: usize },
    #[error("unexpected {found} at offset {offset}, expected one of: {}", expected.join(", "))]
    UnexpectedToken {
        offset: usize,
        found: String,
        expected: Vec<String>,
    },
    #[error("expected keyword '{keyword}' at offset {offset}")]
    MissingKeyword { keyword: &'static str, offset: usize },
    #[error("comparison operators do not chain (offset {offset})")]
    NonAssociative { offset: usize },
    #[error("unknown function '{name}' at offset {offset}")]
    UnknownFunction { name: String, offset: usize },
    #[error("{func} takes {expected} argument(s), found {found} (offset {offset})")]
    Arity {
        func: &'static str,
        expected: usize,
        found: usize,
        offset: usize,
    },
    #[error("constraint body is numeric, expected a boolean expression")]
    NonBooleanBody { span: Span },
    #[error("type mismatch at {}..{}: expected {expected}, found {found}", span.start, span.end)]
    TypeMismatch {
        span: Span,
        expected: &'static str,
        found: &'static str,
    },
    #[error("unbound identifier '{name}'")]
    UnboundIdent { name: String, span: Span },
    #[error("division by zero at {}..{}", span.start, span.end)]
    DivByZero { span: Span },
    #[error("{func} argument outside its domain at {}..{}", span.start, span.end)]
    DomainError { func: &'static str, span: Span },
    #[error("binding '{name}' is not finite")]
    NonFiniteBinding { name: String },
    #[error("tolerances must be finite and non-negative (rel {rel}, abs {abs})")]
    BadTolerance { rel: f64, abs: f64 },
    #[error("bindings line {line}: {message}")]
    Bindings { line: usize, message: String },
}

impl OclError {
    pub fn code(&self) -> &'static str {
        match self {
            OclError::IllegalChar { .. } | OclError::MalformedNumber { .. } => "LEX_ERROR",
            OclError::UnexpectedToken { .. }
            | OclError::NonAssociative { .. }
            | OclError::UnknownFunction { .. }
            | OclError::Arity { .. } => "PARSE_ERROR",
            OclError::MissingKeyword { .. } => "MISSING_KEYWORD",
            OclError::NonBooleanBody { .. } => "NON_BOOLEAN_BODY",
            OclError::TypeMismatch { .. } => "TYPE_MISMATCH",
            OclError::UnboundIdent { .. } => "UNBOUND_IDENT",
            OclError::DivByZero { .. } => "DIV_BY_ZERO",
            OclError::DomainError { .. } => "DOMAIN_ERROR",
            OclError::NonFiniteBinding { .. } | OclError::Bindings { .. } => "BAD_BINDINGS",
            OclError::BadTolerance { .. } => "BAD_TOLERANCE",
        }
    }

    /// Character offset into the constraint source, when the error has one.
    pub fn offset(&self) -> Option<usize> {
        match self {
            OclError::IllegalChar { offset, .. }
            | OclError::MalformedNumber { offset }
            | OclError::UnexpectedToken { offset, .. }
            | OclError::MissingKeyword { offset, .. }
            | OclError::NonAssociative { offset }
            | OclError::UnknownFunction { offset, .. }
            | OclError::Arity { offset, .. } => Some(*offset),
            OclError::NonBooleanBody { span }
            | OclError::TypeMismatch { span, .. }
            | OclError::UnboundIdent { span, .. }
            | OclError::DivByZero { span }
            | OclError::DomainError { span, .. } => Some(span.start),
            _ => None,
        }
    }

    /// True for errors raised before evaluation (lexing, parsing, typing).
    pub fn is_syntax_error(&self) -> bool {
        matches!(
            self.code(),
            "LEX_ERROR" | "PARSE_ERROR" | "MISSING_KEYWORD" | "NON_BOOLEAN_BODY" | "TYPE_MISMATCH"
        )
    }
}
