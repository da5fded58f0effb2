use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::ast::{BinaryOp, ConstraintDef, Expr, ExprKind, Func, Span, UnaryOp};
use super::OclError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleUnit {
    #[default]
    Degrees,
    Radians,
}

impl std::str::FromStr for AngleUnit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degrees" => Ok(AngleUnit::Degrees),
            "radians" => Ok(AngleUnit::Radians),
            other => Err(format!("unknown angle unit '{other}' (expected degrees or radians)")),
        }
    }
}

/// Numeric bindings for a constraint's identifiers.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Env {
    bindings: BTreeMap<String, f64>,
    pub angle_unit: AngleUnit,
}

impl Env {
    pub fn new(angle_unit: AngleUnit) -> Self {
        Env {
            bindings: BTreeMap::new(),
            angle_unit,
        }
    }

    pub fn from_pairs<I, K>(angle_unit: AngleUnit, pairs: I) -> Result<Self, OclError>
    where
        I: IntoIterator<Item = (K, f64)>,
        K: Into<String>,
    {
        let mut env = Env::new(angle_unit);
        for (name, value) in pairs {
            env.bind(name, value)?;
        }
        Ok(env)
    }

    pub fn bind(&mut self, name: impl Into<String>, value: f64) -> Result<(), OclError> {
        let name = name.into();
        if !value.is_finite() {
            return Err(OclError::NonFiniteBinding { name });
        }
        self.bindings.insert(name, value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.bindings.get(name).copied()
    }

    pub fn bindings(&self) -> &BTreeMap<String, f64> {
        &self.bindings
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Num(f64),
    Bool(bool),
}

impl Value {
    pub fn as_num(self) -> Option<f64> {
        match self {
            Value::Num(v) => Some(v),
            Value::Bool(_) => None,
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(b),
            Value::Num(_) => None,
        }
    }

    fn type_name(self) -> &'static str {
        match self {
            Value::Num(_) => "number",
            Value::Bool(_) => "boolean",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(v) => write!(f, "{v}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

/// Mixed absolute/relative tolerance for numeric `=` and `<>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: 1e-9,
            abs: 1e-12,
        }
    }
}

impl Tolerance {
    pub const EXACT: Tolerance = Tolerance { rel: 0.0, abs: 0.0 };

    pub fn new(rel: f64, abs: f64) -> Result<Self, OclError> {
        if !(rel >= 0.0 && abs >= 0.0 && rel.is_finite() && abs.is_finite()) {
            return Err(OclError::BadTolerance { rel, abs });
        }
        Ok(Tolerance { rel, abs })
    }

    /// `|a-b| <= max(abs, rel * max(|a|, |b|))`
    pub fn equal(&self, a: f64, b: f64) -> bool {
        if a == b {
            return true;
        }
        let bound = self.abs.max(self.rel * a.abs().max(b.abs()));
        (a - b).abs() <= bound
    }
}

/// Evaluates with the default tolerance.
pub fn evaluate(expr: &Expr, env: &Env) -> Result<Value, OclError> {
    evaluate_with(expr, env, Tolerance::default())
}

pub fn evaluate_with(expr: &Expr, env: &Env, tol: Tolerance) -> Result<Value, OclError> {
    Evaluator { env, tol }.eval(expr)
}

struct Evaluator<'a> {
    env: &'a Env,
    tol: Tolerance,
}

impl Evaluator<'_> {
    fn num(&self, expr: &Expr) -> Result<f64, OclError> {
        match self.eval(expr)? {
            Value::Num(v) => Ok(v),
            other => Err(mismatch(expr.span, "number", other)),
        }
    }

    fn boolean(&self, expr: &Expr) -> Result<bool, OclError> {
        match self.eval(expr)? {
            Value::Bool(b) => Ok(b),
            other => Err(mismatch(expr.span, "boolean", other)),
        }
    }

    fn eval(&self, expr: &Expr) -> Result<Value, OclError> {
        match &expr.kind {
            ExprKind::Number(v) => Ok(Value::Num(*v)),
            ExprKind::Bool(b) => Ok(Value::Bool(*b)),
            ExprKind::Ident(name) => {
                self.env
                    .get(name)
                    .map(Value::Num)
                    .ok_or_else(|| OclError::UnboundIdent {
                        name: name.clone(),
                        span: expr.span,
                    })
            }
            ExprKind::Unary { op: UnaryOp::Neg, operand } => Ok(Value::Num(-self.num(operand)?)),
            ExprKind::Unary { op: UnaryOp::Not, operand } => {
                Ok(Value::Bool(!self.boolean(operand)?))
            }
            ExprKind::Binary { op: BinaryOp::And, lhs, rhs } => {
                Ok(Value::Bool(self.boolean(lhs)? && self.boolean(rhs)?))
            }
            ExprKind::Binary { op: BinaryOp::Or, lhs, rhs } => {
                Ok(Value::Bool(self.boolean(lhs)? || self.boolean(rhs)?))
            }
            ExprKind::Binary { op: op @ (BinaryOp::Eq | BinaryOp::Ne), lhs, rhs } => {
                let equal = match (self.eval(lhs)?, self.eval(rhs)?) {
                    (Value::Num(a), Value::Num(b)) => self.tol.equal(a, b),
                    (Value::Bool(a), Value::Bool(b)) => a == b,
                    (left, right) => return Err(mismatch(rhs.span, left.type_name(), right)),
                };
                Ok(Value::Bool(equal == (*op == BinaryOp::Eq)))
            }
            ExprKind::Binary { op, lhs, rhs } => {
                let a = self.num(lhs)?;
                let b = self.num(rhs)?;
                Ok(match op {
                    BinaryOp::Add => Value::Num(a + b),
                    BinaryOp::Sub => Value::Num(a - b),
                    BinaryOp::Mul => Value::Num(a * b),
                    BinaryOp::Div => {
                        if b == 0.0 {
                            return Err(OclError::DivByZero { span: expr.span });
                        }
                        Value::Num(a / b)
                    }
                    BinaryOp::Lt => Value::Bool(a < b),
                    BinaryOp::Le => Value::Bool(a <= b),
                    BinaryOp::Gt => Value::Bool(a > b),
                    BinaryOp::Ge => Value::Bool(a >= b),
                    _ => unreachable!("handled above"),
                })
            }
            ExprKind::Call { func, args } => {
                let x = self.num(&args[0])?;
                let domain = || OclError::DomainError {
                    func: func.name(),
                    span: expr.span,
                };
                let v = match func {
                    Func::Sin => sin(x, self.env.angle_unit),
                    Func::Cos => cos(x, self.env.angle_unit),
                    Func::Tan => tan(x, self.env.angle_unit).ok_or_else(domain)?,
                    Func::Sqrt if x < 0.0 => return Err(domain()),
                    Func::Sqrt => x.sqrt(),
                    Func::Abs => x.abs(),
                    Func::Min => x.min(self.num(&args[1])?),
                    Func::Max => x.max(self.num(&args[1])?),
                };
                Ok(Value::Num(v))
            }
        }
    }
}

fn mismatch(span: Span, expected: &'static str, found: Value) -> OclError {
    OclError::TypeMismatch {
        span,
        expected,
        found: found.type_name(),
    }
}

// Degree arguments are reduced to a quadrant and a remainder in [-45, 45];
// remainders 0, ±30 and ±45 map to closed forms.
fn reduce_degrees(x: f64) -> (u8, f64) {
    let mut r = x % 360.0;
    if r < 0.0 {
        r += 360.0;
    }
    if r >= 360.0 {
        r -= 360.0;
    }
    let q = (r / 90.0).round();
    (q as u8 % 4, r - q * 90.0)
}

fn sin_small_deg(r: f64) -> f64 {
    match r {
        r if r == 0.0 => r,
        r if r.abs() == 30.0 => 0.5f64.copysign(r),
        r if r.abs() == 45.0 => FRAC_1_SQRT_2.copysign(r),
        r => r.to_radians().sin(),
    }
}

fn cos_small_deg(r: f64) -> f64 {
    match r.abs() {
        0.0 => 1.0,
        30.0 => 3f64.sqrt() / 2.0,
        45.0 => FRAC_1_SQRT_2,
        a => a.to_radians().cos(),
    }
}

fn sin(x: f64, unit: AngleUnit) -> f64 {
    match unit {
        AngleUnit::Radians => x.sin(),
        AngleUnit::Degrees => {
            let (q, r) = reduce_degrees(x);
            match q {
                0 => sin_small_deg(r),
                1 => cos_small_deg(r),
                2 => -sin_small_deg(r),
                _ => -cos_small_deg(r),
            }
        }
    }
}

fn cos(x: f64, unit: AngleUnit) -> f64 {
    match unit {
        AngleUnit::Radians => x.cos(),
        AngleUnit::Degrees => {
            let (q, r) = reduce_degrees(x);
            match q {
                0 => cos_small_deg(r),
                1 => -sin_small_deg(r),
                2 => -cos_small_deg(r),
                _ => sin_small_deg(r),
            }
        }
    }
}

fn tan_small_deg(r: f64) -> f64 {
    match r.abs() {
        0.0 => r,
        30.0 => (1.0 / 3f64.sqrt()).copysign(r),
        45.0 => 1f64.copysign(r),
        _ => r.to_radians().tan(),
    }
}

/// `None` at the poles, which only exist in degrees.
fn tan(x: f64, unit: AngleUnit) -> Option<f64> {
    match unit {
        AngleUnit::Radians => Some(x.tan()),
        AngleUnit::Degrees => {
            let (q, r) = reduce_degrees(x);
            if q % 2 == 0 {
                Some(tan_small_deg(r))
            } else if r == 0.0 {
                None
            } else {
                Some(-1.0 / tan_small_deg(r))
            }
        }
    }
}

/// Outcome of checking one invariant against a set of bindings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub holds: bool,
    /// Left and right values when the body is a numeric equality.
    pub lhs_value: Option<f64>,
    pub rhs_value: Option<f64>,
    /// `|lhs - rhs|` for a top-level numeric equality.
    pub residual: Option<f64>,
    /// Spans of the smallest false sub-terms responsible for a violation.
    pub violated_subterms: Vec<Span>,
}

pub fn check_invariant(
    constraint: &ConstraintDef,
    env: &Env,
    tol: Tolerance,
) -> Result<CheckReport, OclError> {
    let holds = match evaluate_with(&constraint.body, env, tol)? {
        Value::Bool(b) => b,
        other => return Err(mismatch(constraint.body.span, "boolean", other)),
    };

    let (mut lhs_value, mut rhs_value, mut residual) = (None, None, None);
    if let ExprKind::Binary { op: BinaryOp::Eq, lhs, rhs } = &constraint.body.kind {
        if let (Value::Num(a), Value::Num(b)) =
            (evaluate_with(lhs, env, tol)?, evaluate_with(rhs, env, tol)?)
        {
            lhs_value = Some(a);
            rhs_value = Some(b);
            residual = Some((a - b).abs());
        }
    }

    let mut violated_subterms = Vec::new();
    if !holds {
        collect_false(&constraint.body, env, tol, &mut violated_subterms);
    }

    Ok(CheckReport {
        holds,
        lhs_value,
        rhs_value,
        residual,
        violated_subterms,
    })
}

// Called only on sub-terms known to evaluate to false.
fn collect_false(expr: &Expr, env: &Env, tol: Tolerance, out: &mut Vec<Span>) {
    let is_false =
        |e: &Expr| matches!(evaluate_with(e, env, tol), Ok(Value::Bool(false)));
    match &expr.kind {
        ExprKind::Binary { op: BinaryOp::And, lhs, rhs } => {
            if is_false(lhs) {
                collect_false(lhs, env, tol, out);
            } else {
                collect_false(rhs, env, tol, out);
            }
        }
        ExprKind::Binary { op: BinaryOp::Or, lhs, rhs } => {
            collect_false(lhs, env, tol, out);
            collect_false(rhs, env, tol, out);
        }
        _ => out.push(expr.span),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ocl::{parse_constraint, parse_expression_str};

    const CONE_RHS: &str = "external_tip_diameter + 2 * (cone_length * SIN(cone_angle))";

    fn pen_env(cone_angle: f64) -> Env {
        Env::from_pairs(
            AngleUnit::Degrees,
            [
                ("external_tip_diameter", 2.0),
                ("cone_length", 5.0),
                ("cone_angle", cone_angle),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sin_of_zero() {
        let e = parse_expression_str("SIN(cone_angle)").unwrap();
        let env = Env::from_pairs(AngleUnit::Degrees, [("cone_angle", 0.0)]).unwrap();
        assert_eq!(evaluate(&e, &env).unwrap(), Value::Num(0.0));
    }

    #[test]
    fn cone_rhs_at_thirty_degrees_is_exactly_seven() {
        let e = parse_expression_str(CONE_RHS).unwrap();
        assert_eq!(evaluate(&e, &pen_env(30.0)).unwrap(), Value::Num(7.0));
    }

    #[test]
    fn cone_rhs_at_twenty_degrees() {
        // 2 + 10 sin(20 deg) = 5.42020143325668733044..., computed with mpmath at 30 digits
        let e = parse_expression_str(CONE_RHS).unwrap();
        let v = evaluate(&e, &pen_env(20.0)).unwrap().as_num().unwrap();
        assert!((v - 5.420_201_433_256_687).abs() < 1e-14, "{v}");
    }

    #[test]
    fn special_angles_exact() {
        let d = AngleUnit::Degrees;
        assert_eq!(sin(30.0, d), 0.5);
        assert_eq!(sin(150.0, d), 0.5);
        assert_eq!(sin(-30.0, d), -0.5);
        assert_eq!(sin(390.0, d), 0.5);
        assert_eq!(cos(60.0, d), 0.5);
        assert_eq!(sin(90.0, d), 1.0);
        assert_eq!(sin(180.0, d), 0.0);
        assert_eq!(cos(90.0, d), 0.0);
        assert_eq!(tan(45.0, d), Some(1.0));
        assert_eq!(tan(90.0, d), None);
    }

    #[test]
    fn degrees_agree_with_radians() {
        for i in -720..=720 {
            let deg = i as f64 * 0.75;
            let rad = deg * std::f64::consts::PI / 180.0;
            assert!((sin(deg, AngleUnit::Degrees) - rad.sin()).abs() < 1e-12, "{deg}");
            assert!((cos(deg, AngleUnit::Degrees) - rad.cos()).abs() < 1e-12, "{deg}");
        }
    }

    #[test]
    fn check_holds_with_zero_residual() {
        let c = parse_constraint(&format!(
            "context interior_diameter inv : interior_diameter = {CONE_RHS}"
        ))
        .unwrap();
        let mut env = pen_env(30.0);
        env.bind("interior_diameter", 7.0).unwrap();
        let r = check_invariant(&c, &env, Tolerance::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.residual, Some(0.0));
        assert_eq!(r.lhs_value, Some(7.0));
        assert!(r.violated_subterms.is_empty());

        env.bind("interior_diameter", 7.1).unwrap();
        let r = check_invariant(&c, &env, Tolerance::default()).unwrap();
        assert!(!r.holds);
        assert!((r.residual.unwrap() - 0.1).abs() <= 1e-12);
        assert_eq!(r.violated_subterms, vec![c.body.span]);
    }

    #[test]
    fn unbound_identifier() {
        let c = parse_constraint(&format!("context d inv : d = {CONE_RHS}")).unwrap();
        let env = Env::from_pairs(
            AngleUnit::Degrees,
            [("d", 7.0), ("external_tip_diameter", 2.0), ("cone_angle", 30.0)],
        )
        .unwrap();
        match check_invariant(&c, &env, Tolerance::default()) {
            Err(OclError::UnboundIdent { name, .. }) => assert_eq!(name, "cone_length"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn runtime_errors() {
        let env = Env::from_pairs(AngleUnit::Radians, [("x", -1.0), ("z", 0.0)]).unwrap();
        let eval = |s: &str| evaluate(&parse_expression_str(s).unwrap(), &env);
        assert!(matches!(eval("1 / z"), Err(OclError::DivByZero { .. })));
        assert!(matches!(eval("SQRT(x)"), Err(OclError::DomainError { func: "SQRT", .. })));
        assert!(matches!(eval("1 + true"), Err(OclError::TypeMismatch { .. })));
        assert!(matches!(eval("x = true"), Err(OclError::TypeMismatch { .. })));
        assert_eq!(eval("MIN(x, 3)").unwrap(), Value::Num(-1.0));
        assert_eq!(eval("ABS(x)").unwrap(), Value::Num(1.0));
    }

    #[test]
    fn logic_short_circuits() {
        let env = Env::new(AngleUnit::Radians);
        let eval = |s: &str| evaluate(&parse_expression_str(s).unwrap(), &env);
        // the right operand would fail with UNBOUND_IDENT if evaluated
        assert_eq!(eval("false and missing > 0").unwrap(), Value::Bool(false));
        assert_eq!(eval("true or missing > 0").unwrap(), Value::Bool(true));
        assert!(eval("true and missing > 0").is_err());
    }

    #[test]
    fn tolerance_policy() {
        let t = Tolerance::default();
        assert!(t.equal(1e6, 1e6 + 1e-4));
        assert!(!t.equal(1e6, 1e6 + 1e-2));
        assert!(t.equal(0.0, 1e-13));
        assert!(!t.equal(0.0, 1e-11));
        assert!(!Tolerance::EXACT.equal(0.1 + 0.2, 0.3));
        assert!(Tolerance::EXACT.equal(0.5, 0.5));
        assert!(Tolerance::new(-1.0, 0.0).is_err());
    }

    #[test]
    fn violated_subterms_point_at_false_conjunct() {
        let src = "context c inv : a > 0 and b > 0";
        let c = parse_constraint(src).unwrap();
        let env = Env::from_pairs(AngleUnit::Degrees, [("a", 1.0), ("b", -1.0)]).unwrap();
        let r = check_invariant(&c, &env, Tolerance::default()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.residual, None);
        let chars: Vec<char> = src.chars().collect();
        let s = r.violated_subterms[0];
        let text: String = chars[s.start..s.end].iter().collect();
        assert_eq!(text, "b > 0");
    }
}
