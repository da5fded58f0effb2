use std::fmt;

use serde::{Deserialize, Serialize};

/// Half-open character range `[start, end)` into the constraint source.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Neg,
    Not,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}

impl BinaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Eq => "=",
            BinaryOp::Ne => "<>",
            BinaryOp::Lt => "<",
            BinaryOp::Le => "<=",
            BinaryOp::Gt => ">",
            BinaryOp::Ge => ">=",
            BinaryOp::And => "and",
            BinaryOp::Or => "or",
        }
    }

    pub fn is_comparison(self) -> bool {
        matches!(
            self,
            BinaryOp::Eq | BinaryOp::Ne | BinaryOp::Lt | BinaryOp::Le | BinaryOp::Gt | BinaryOp::Ge
        )
    }

    pub fn is_arithmetic(self) -> bool {
        matches!(self, BinaryOp::Add | BinaryOp::Sub | BinaryOp::Mul | BinaryOp::Div)
    }

    pub(crate) fn precedence(self) -> u8 {
        match self {
            BinaryOp::Or => PREC_OR,
            BinaryOp::And => PREC_AND,
            BinaryOp::Add | BinaryOp::Sub => PREC_ADD,
            BinaryOp::Mul | BinaryOp::Div => PREC_MUL,
            _ => PREC_CMP,
        }
    }
}

pub(crate) const PREC_OR: u8 = 1;
pub(crate) const PREC_AND: u8 = 2;
pub(crate) const PREC_NOT: u8 = 3;
pub(crate) const PREC_CMP: u8 = 4;
pub(crate) const PREC_ADD: u8 = 5;
pub(crate) const PREC_MUL: u8 = 6;
pub(crate) const PREC_NEG: u8 = 7;
pub(crate) const PREC_PRIMARY: u8 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Sqrt,
    Abs,
    Min,
    Max,
}

impl Func {
    pub const ALL: [Func; 7] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Sqrt,
        Func::Abs,
        Func::Min,
        Func::Max,
    ];

    /// Case-insensitive lookup.
    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "SIN",
            Func::Cos => "COS",
            Func::Tan => "TAN",
            Func::Sqrt => "SQRT",
            Func::Abs => "ABS",
            Func::Min => "MIN",
            Func::Max => "MAX",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Min | Func::Max => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Number(f64),
    Bool(bool),
    Ident(String),
    Unary {
        op: UnaryOp,
        operand: Box<Expr>,
    },
    Binary {
        op: BinaryOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Call {
        func: Func,
        args: Vec<Expr>,
    },
}

/// Expression node with the source span it was parsed from.
///
/// `PartialEq` compares spans too; use [`Expr::same_shape`] to compare trees
/// parsed from differently formatted text.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    pub fn number(value: f64) -> Self {
        Expr::new(ExprKind::Number(value), Span::default())
    }

    pub fn boolean(value: bool) -> Self {
        Expr::new(ExprKind::Bool(value), Span::default())
    }

    pub fn ident(name: impl Into<String>) -> Self {
        Expr::new(ExprKind::Ident(name.into()), Span::default())
    }

    pub fn unary(op: UnaryOp, operand: Expr) -> Self {
        Expr::new(
            ExprKind::Unary {
                op,
                operand: Box::new(operand),
            },
            Span::default(),
        )
    }

    pub fn binary(op: BinaryOp, lhs: Expr, rhs: Expr) -> Self {
        Expr::new(
            ExprKind::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            },
            Span::default(),
        )
    }

    pub fn call(func: Func, args: Vec<Expr>) -> Self {
        Expr::new(ExprKind::Call { func, args }, Span::default())
    }

    /// Structural equality ignoring spans.
    pub fn same_shape(&self, other: &Expr) -> bool {
        match (&self.kind, &other.kind) {
            (ExprKind::Number(a), ExprKind::Number(b)) => a.to_bits() == b.to_bits(),
            (ExprKind::Bool(a), ExprKind::Bool(b)) => a == b,
            (ExprKind::Ident(a), ExprKind::Ident(b)) => a == b,
            (
                ExprKind::Unary { op: o1, operand: a },
                ExprKind::Unary { op: o2, operand: b },
            ) => o1 == o2 && a.same_shape(b),
            (
                ExprKind::Binary {
                    op: o1,
                    lhs: l1,
                    rhs: r1,
                },
                ExprKind::Binary {
                    op: o2,
                    lhs: l2,
                    rhs: r2,
                },
            ) => o1 == o2 && l1.same_shape(l2) && r1.same_shape(r2),
            (ExprKind::Call { func: f1, args: a1 }, ExprKind::Call { func: f2, args: a2 }) => {
                f1 == f2 && a1.len() == a2.len() && a1.iter().zip(a2).all(|(x, y)| x.same_shape(y))
            }
            _ => false,
        }
    }

    /// Identifiers referenced anywhere in the tree, in first-occurrence order.
    pub fn identifiers(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_idents(&mut out);
        out
    }

    fn collect_idents<'a>(&'a self, out: &mut Vec<&'a str>) {
        match &self.kind {
            ExprKind::Ident(name) => {
                if !out.contains(&name.as_str()) {
                    out.push(name);
                }
            }
            ExprKind::Unary { operand, .. } => operand.collect_idents(out),
            ExprKind::Binary { lhs, rhs, .. } => {
                lhs.collect_idents(out);
                rhs.collect_idents(out);
            }
            ExprKind::Call { args, .. } => args.iter().for_each(|a| a.collect_idents(out)),
            ExprKind::Number(_) | ExprKind::Bool(_) => {}
        }
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Unary { op: UnaryOp::Not, .. } => PREC_NOT,
            ExprKind::Unary { op: UnaryOp::Neg, .. } => PREC_NEG,
            ExprKind::Binary { op, .. } => op.precedence(),
            _ => PREC_PRIMARY,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let parens = self.precedence() < min_prec;
        if parens {
            f.write_str("(")?;
        }
        match &self.kind {
            ExprKind::Number(v) => write!(f, "{v}")?,
            ExprKind::Bool(b) => write!(f, "{b}")?,
            ExprKind::Ident(name) => f.write_str(name)?,
            ExprKind::Unary { op: UnaryOp::Neg, operand } => {
                f.write_str("-")?;
                operand.write_at(f, PREC_NEG)?;
            }
            ExprKind::Unary { op: UnaryOp::Not, operand } => {
                f.write_str("not ")?;
                operand.write_at(f, PREC_NOT)?;
            }
            ExprKind::Binary { op, lhs, rhs } => {
                let prec = op.precedence();
                // comparisons do not chain, so both sides bind tighter
                let (lp, rp) = if op.is_comparison() {
                    (prec + 1, prec + 1)
                } else {
                    (prec, prec + 1)
                };
                lhs.write_at(f, lp)?;
                write!(f, " {} ", op.symbol())?;
                rhs.write_at(f, rp)?;
            }
            ExprKind::Call { func, args } => {
                write!(f, "{}(", func.name())?;
                for (n, arg) in args.iter().enumerate() {
                    if n > 0 {
                        f.write_str(", ")?;
                    }
                    arg.write_at(f, PREC_OR)?;
                }
                f.write_str(")")?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Minimal-parenthesis pretty printer; the output reparses to the same shape.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, PREC_OR)
    }
}

/// A named invariant: `context <name> inv : <body>`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintDef {
    pub context_name: String,
    pub body: Expr,
}

impl fmt::Display for ConstraintDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "context {} inv : {}", self.context_name, self.body)
    }
}
