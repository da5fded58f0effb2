//! A reference interpreter for the constraint language, kept deliberately
//! naive: its own tree, its own renderer, its own tree walker. Expressions
//! are generated here, rendered to text, and the text is what the real
//! parser and evaluator see.

use std::collections::BTreeMap;

use proptest::prelude::*;

use crate::trig_table::TRIG_DEGREES;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
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

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fun {
    Sin,
    Cos,
    Tan,
    Sqrt,
    Abs,
    Min,
    Max,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Num(f64),
    Bool(bool),
    Var(String),
    Neg(Box<Node>),
    Not(Box<Node>),
    Bin(Op, Box<Node>, Box<Node>),
    /// The spelling records the case the function name is rendered in.
    Call(Fun, String, Vec<Node>),
    Paren(Box<Node>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Val {
    Num(f64),
    Bool(bool),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    Unbound,
    DivByZero,
    TypeMismatch,
    Domain,
    /// Trig outside the frozen table (non-integral degrees, or radians).
    NotTabulated,
}

impl Fault {
    /// The code the real evaluator reports for the same failure.
    pub fn code(self) -> &'static str {
        match self {
            Fault::Unbound => "UNBOUND_IDENT",
            Fault::DivByZero => "DIV_BY_ZERO",
            Fault::TypeMismatch => "TYPE_MISMATCH",
            Fault::Domain => "DOMAIN_ERROR",
            Fault::NotTabulated => "NOT_TABULATED",
        }
    }
}

fn level(node: &Node) -> u8 {
    match node {
        Node::Bin(Op::Or, ..) => 1,
        Node::Bin(Op::And, ..) => 2,
        Node::Not(_) => 3,
        Node::Bin(Op::Eq | Op::Ne | Op::Lt | Op::Le | Op::Gt | Op::Ge, ..) => 4,
        Node::Bin(Op::Add | Op::Sub, ..) => 5,
        Node::Bin(Op::Mul | Op::Div, ..) => 6,
        Node::Neg(_) => 7,
        _ => 8,
    }
}

fn symbol(op: Op) -> &'static str {
    match op {
        Op::Add => "+",
        Op::Sub => "-",
        Op::Mul => "*",
        Op::Div => "/",
        Op::Eq => "=",
        Op::Ne => "<>",
        Op::Lt => "<",
        Op::Le => "<=",
        Op::Gt => ">",
        Op::Ge => ">=",
        Op::And => "and",
        Op::Or => "or",
    }
}

/// Renders with the minimum parentheses the grammar needs, plus any
/// explicit `Paren` nodes.
pub fn render(node: &Node) -> String {
    let mut out = String::new();
    write(node, 1, &mut out);
    out
}

fn write(node: &Node, min: u8, out: &mut String) {
    let wrap = level(node) < min;
    if wrap {
        out.push('(');
    }
    match node {
        Node::Num(v) => out.push_str(&format!("{v:?}")),
        Node::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Node::Var(name) => out.push_str(name),
        Node::Neg(inner) => {
            out.push('-');
            write(inner, 7, out);
        }
        Node::Not(inner) => {
            out.push_str("not ");
            write(inner, 3, out);
        }
        Node::Bin(op, l, r) => {
            let (lmin, rmin) = match level(node) {
                4 => (5, 5),
                n => (n, n + 1),
            };
            write(l, lmin, out);
            out.push(' ');
            out.push_str(symbol(*op));
            out.push(' ');
            write(r, rmin, out);
        }
        Node::Call(_, name, args) => {
            out.push_str(name);
            out.push('(');
            for (n, a) in args.iter().enumerate() {
                if n > 0 {
                    out.push_str(", ");
                }
                write(a, 1, out);
            }
            out.push(')');
        }
        Node::Paren(inner) => {
            out.push('(');
            write(inner, 1, out);
            out.push(')');
        }
    }
    if wrap {
        out.push(')');
    }
}

/// Bindings plus the angle unit; `degrees == false` means radians.
#[derive(Debug, Clone, Default)]
pub struct Bindings {
    pub values: BTreeMap<String, f64>,
    pub degrees: bool,
}

/// Table lookup for whole-degree arguments.
pub fn trig_degrees(fun: Fun, x: f64) -> Result<f64, Fault> {
    if x.fract() != 0.0 || x.abs() > 1e15 {
        return Err(Fault::NotTabulated);
    }
    let (s, c, t) = TRIG_DEGREES[(x as i64).rem_euclid(360) as usize];
    match fun {
        Fun::Sin => Ok(f64::from_bits(s)),
        Fun::Cos => Ok(f64::from_bits(c)),
        Fun::Tan => t.map(f64::from_bits).ok_or(Fault::Domain),
        _ => unreachable!("not a trig function"),
    }
}

fn close_enough(a: f64, b: f64) -> bool {
    let scale = if a.abs() > b.abs() { a.abs() } else { b.abs() };
    let bound = if 1e-9 * scale > 1e-12 { 1e-9 * scale } else { 1e-12 };
    a == b || (a - b).abs() <= bound
}

pub fn eval(node: &Node, env: &Bindings) -> Result<Val, Fault> {
    let num = |n: &Node| match eval(n, env)? {
        Val::Num(v) => Ok(v),
        Val::Bool(_) => Err(Fault::TypeMismatch),
    };
    let truth = |n: &Node| match eval(n, env)? {
        Val::Bool(b) => Ok(b),
        Val::Num(_) => Err(Fault::TypeMismatch),
    };
    match node {
        Node::Num(v) => Ok(Val::Num(*v)),
        Node::Bool(b) => Ok(Val::Bool(*b)),
        Node::Var(name) => env.values.get(name).map(|v| Val::Num(*v)).ok_or(Fault::Unbound),
        Node::Paren(inner) => eval(inner, env),
        Node::Neg(inner) => Ok(Val::Num(-num(inner)?)),
        Node::Not(inner) => Ok(Val::Bool(!truth(inner)?)),
        Node::Bin(Op::And, l, r) => {
            if !truth(l)? {
                return Ok(Val::Bool(false));
            }
            Ok(Val::Bool(truth(r)?))
        }
        Node::Bin(Op::Or, l, r) => {
            if truth(l)? {
                return Ok(Val::Bool(true));
            }
            Ok(Val::Bool(truth(r)?))
        }
        Node::Bin(op @ (Op::Eq | Op::Ne), l, r) => {
            let same = match (eval(l, env)?, eval(r, env)?) {
                (Val::Num(a), Val::Num(b)) => close_enough(a, b),
                (Val::Bool(a), Val::Bool(b)) => a == b,
                _ => return Err(Fault::TypeMismatch),
            };
            Ok(Val::Bool(if *op == Op::Eq { same } else { !same }))
        }
        Node::Bin(op, l, r) => {
            let a = num(l)?;
            let b = num(r)?;
            Ok(match op {
                Op::Add => Val::Num(a + b),
                Op::Sub => Val::Num(a - b),
                Op::Mul => Val::Num(a * b),
                Op::Div if b == 0.0 => return Err(Fault::DivByZero),
                Op::Div => Val::Num(a / b),
                Op::Lt => Val::Bool(a < b),
                Op::Le => Val::Bool(a <= b),
                Op::Gt => Val::Bool(a > b),
                Op::Ge => Val::Bool(a >= b),
                _ => unreachable!(),
            })
        }
        Node::Call(fun, _, args) => {
            let x = num(&args[0])?;
            let v = match fun {
                Fun::Sin | Fun::Cos | Fun::Tan if env.degrees => trig_degrees(*fun, x)?,
                Fun::Sin | Fun::Cos | Fun::Tan => return Err(Fault::NotTabulated),
                Fun::Sqrt if x < 0.0 => return Err(Fault::Domain),
                Fun::Sqrt => x.sqrt(),
                Fun::Abs => {
                    if x < 0.0 {
                        -x
                    } else {
                        x
                    }
                }
                Fun::Min => {
                    let y = num(&args[1])?;
                    if y < x {
                        y
                    } else {
                        x
                    }
                }
                Fun::Max => {
                    let y = num(&args[1])?;
                    if y > x {
                        y
                    } else {
                        x
                    }
                }
            };
            Ok(Val::Num(v))
        }
    }
}

/// Distance in representable doubles; signed zeros coincide, two NaNs are
/// equal, anything else involving NaN is infinitely far.
pub fn ulps(a: f64, b: f64) -> u64 {
    if a.is_nan() && b.is_nan() {
        return 0;
    }
    if a.is_nan() || b.is_nan() {
        return u64::MAX;
    }
    fn key(x: f64) -> i64 {
        let bits = x.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    }
    key(a).abs_diff(key(b))
}

pub const VARS: [&str; 5] = ["a", "b", "cone_angle", "x_1", "Dia"];

fn literal() -> impl Strategy<Value = f64> {
    prop_oneof![
        4 => (0u32..12).prop_map(f64::from),
        2 => prop::sample::select(vec![0.5, 0.1, 2.25, 1e-3, 1e6, 3.0e-8]),
        3 => 0.0f64..1000.0,
    ]
}

fn spelling(fun: Fun) -> impl Strategy<Value = String> {
    let upper = match fun {
        Fun::Sin => "SIN",
        Fun::Cos => "COS",
        Fun::Tan => "TAN",
        Fun::Sqrt => "SQRT",
        Fun::Abs => "ABS",
        Fun::Min => "MIN",
        Fun::Max => "MAX",
    };
    prop::collection::vec(any::<bool>(), upper.len()).prop_map(move |lower| {
        upper
            .chars()
            .zip(lower)
            .map(|(c, l)| if l { c.to_ascii_lowercase() } else { c })
            .collect()
    })
}

fn parens(s: BoxedStrategy<Node>) -> BoxedStrategy<Node> {
    (s, prop::bool::weighted(0.15))
        .prop_map(|(n, wrap)| if wrap { Node::Paren(Box::new(n)) } else { n })
        .boxed()
}

fn num_leaf() -> BoxedStrategy<Node> {
    prop_oneof![
        3 => literal().prop_map(Node::Num),
        3 => prop::sample::select(VARS.to_vec()).prop_map(|v| Node::Var(v.to_string())),
        1 => Just(Node::Var("unbound".to_string())),
    ]
    .boxed()
}

/// Numeric expressions without trigonometry.
pub fn arith(depth: u32) -> BoxedStrategy<Node> {
    if depth == 0 {
        return num_leaf();
    }
    let sub = arith(depth - 1);
    let bin = prop::sample::select(vec![Op::Add, Op::Sub, Op::Mul, Op::Div]);
    let unary_fun = prop::sample::select(vec![Fun::Sqrt, Fun::Abs])
        .prop_flat_map(|f| spelling(f).prop_map(move |s| (f, s)));
    let binary_fun = prop::sample::select(vec![Fun::Min, Fun::Max])
        .prop_flat_map(|f| spelling(f).prop_map(move |s| (f, s)));
    parens(
        prop_oneof![
            2 => num_leaf(),
            5 => (bin, sub.clone(), sub.clone())
                .prop_map(|(op, l, r)| Node::Bin(op, Box::new(l), Box::new(r))),
            1 => sub.clone().prop_map(|n| Node::Neg(Box::new(n))),
            1 => (unary_fun, sub.clone()).prop_map(|((f, s), a)| Node::Call(f, s, vec![a])),
            1 => (binary_fun, sub.clone(), sub)
                .prop_map(|((f, s), a, b)| Node::Call(f, s, vec![a, b])),
        ]
        .boxed(),
    )
}

/// Boolean expressions over [`arith`] operands.
pub fn logic(depth: u32) -> BoxedStrategy<Node> {
    let cmp = prop::sample::select(vec![Op::Eq, Op::Ne, Op::Lt, Op::Le, Op::Gt, Op::Ge]);
    let comparison = (cmp, arith(depth.min(3)), arith(depth.min(3)))
        .prop_map(|(op, l, r)| Node::Bin(op, Box::new(l), Box::new(r)));
    if depth == 0 {
        return prop_oneof![3 => comparison, 1 => any::<bool>().prop_map(Node::Bool)].boxed();
    }
    let sub = logic(depth - 1);
    let connective = prop::sample::select(vec![Op::And, Op::Or, Op::Eq, Op::Ne]);
    parens(
        prop_oneof![
            3 => comparison,
            1 => any::<bool>().prop_map(Node::Bool),
            4 => (connective, sub.clone(), sub.clone())
                .prop_map(|(op, l, r)| Node::Bin(op, Box::new(l), Box::new(r))),
            1 => sub.prop_map(|n| Node::Not(Box::new(n))),
        ]
        .boxed(),
    )
}

/// Mostly well-typed trees, with an occasional numeric/boolean swap to
/// exercise type errors.
pub fn expression() -> BoxedStrategy<Node> {
    let mistyped = (arith(2), logic(1), any::<bool>()).prop_map(|(n, b, left)| {
        if left {
            Node::Bin(Op::Add, Box::new(b), Box::new(n))
        } else {
            Node::Bin(Op::And, Box::new(b), Box::new(n))
        }
    });
    prop_oneof![
        5 => arith(4),
        5 => logic(3),
        1 => mistyped,
    ]
    .boxed()
}

pub fn bindings() -> impl Strategy<Value = Bindings> {
    let value = prop_oneof![
        3 => (-20i32..20).prop_map(f64::from),
        3 => -1.0e4f64..1.0e4,
        1 => Just(0.0),
        1 => -1.0e-6f64..1.0e-6,
    ];
    prop::collection::vec(value, VARS.len()).prop_map(|vals| Bindings {
        values: VARS.iter().map(|v| v.to_string()).zip(vals).collect(),
        degrees: true,
    })
}

/// A single trig call on a whole-degree argument.
pub fn trig_call() -> impl Strategy<Value = (Node, Bindings)> {
    let fun = prop::sample::select(vec![Fun::Sin, Fun::Cos, Fun::Tan])
        .prop_flat_map(|f| spelling(f).prop_map(move |s| (f, s)));
    (fun, -100_000i32..100_000).prop_map(|((f, s), deg)| {
        let env = Bindings {
            values: [("cone_angle".to_string(), f64::from(deg))].into(),
            degrees: true,
        };
        (Node::Call(f, s, vec![Node::Var("cone_angle".into())]), env)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(op: Op, l: Node, r: Node) -> Node {
        Node::Bin(op, Box::new(l), Box::new(r))
    }

    #[test]
    fn renders_minimal_parentheses() {
        let v = |s: &str| Node::Var(s.into());
        let e = bin(Op::Sub, v("a"), bin(Op::Sub, v("b"), v("c")));
        assert_eq!(render(&e), "a - (b - c)");
        let e = bin(Op::Mul, bin(Op::Add, v("a"), v("b")), Node::Neg(Box::new(v("c"))));
        assert_eq!(render(&e), "(a + b) * -c");
        let e = Node::Not(Box::new(bin(Op::Eq, bin(Op::Lt, v("a"), v("b")), Node::Bool(true))));
        assert_eq!(render(&e), "not (a < b) = true");
        let e = bin(Op::And, Node::Not(Box::new(Node::Bool(false))), bin(Op::Or, Node::Bool(true), Node::Bool(false)));
        assert_eq!(render(&e), "not false and (true or false)");
    }

    #[test]
    fn short_circuit_skips_errors() {
        let div = bin(Op::Gt, bin(Op::Div, Node::Num(1.0), Node::Num(0.0)), Node::Num(0.0));
        let env = Bindings::default();
        assert_eq!(eval(&bin(Op::And, Node::Bool(false), div.clone()), &env), Ok(Val::Bool(false)));
        assert_eq!(eval(&bin(Op::Or, Node::Bool(false), div), &env), Err(Fault::DivByZero));
    }

    #[test]
    fn table_endpoints() {
        assert_eq!(trig_degrees(Fun::Sin, 30.0), Ok(0.5));
        assert_eq!(trig_degrees(Fun::Cos, -360.0), Ok(1.0));
        assert_eq!(trig_degrees(Fun::Tan, 270.0), Err(Fault::Domain));
        assert_eq!(trig_degrees(Fun::Sin, 0.5), Err(Fault::NotTabulated));
    }

    #[test]
    fn ulp_metric() {
        assert_eq!(ulps(0.0, -0.0), 0);
        assert_eq!(ulps(1.0, 1.0 + f64::EPSILON), 1);
        assert_eq!(ulps(f64::from_bits(1), -f64::from_bits(1)), 2);
        assert_eq!(ulps(f64::NAN, 1.0), u64::MAX);
    }
}
