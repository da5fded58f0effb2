use super::ast::{BinaryOp, Expr, ExprKind, UnaryOp};
use super::OclError;

/// The two value types of the constraint language. Identifiers are numeric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Type {
    Num,
    Bool,
}

impl Type {
    pub fn name(self) -> &'static str {
        match self {
            Type::Num => "number",
            Type::Bool => "boolean",
        }
    }
}

pub fn check_types(expr: &Expr) -> Result<Type, OclError> {
    let expect = |e: &Expr, want: Type| -> Result<(), OclError> {
        let got = check_types(e)?;
        if got == want {
            Ok(())
        } else {
            Err(OclError::TypeMismatch {
                span: e.span,
                expected: want.name(),
                found: got.name(),
            })
        }
    };
    match &expr.kind {
        ExprKind::Number(_) | ExprKind::Ident(_) => Ok(Type::Num),
        ExprKind::Bool(_) => Ok(Type::Bool),
        ExprKind::Unary { op: UnaryOp::Neg, operand } => expect(operand, Type::Num).map(|_| Type::Num),
        ExprKind::Unary { op: UnaryOp::Not, operand } => {
            expect(operand, Type::Bool).map(|_| Type::Bool)
        }
        ExprKind::Binary { op, lhs, rhs } => match op {
            BinaryOp::And | BinaryOp::Or => {
                expect(lhs, Type::Bool)?;
                expect(rhs, Type::Bool)?;
                Ok(Type::Bool)
            }
            BinaryOp::Eq | BinaryOp::Ne => {
                let left = check_types(lhs)?;
                expect(rhs, left)?;
                Ok(Type::Bool)
            }
            op if op.is_comparison() => {
                expect(lhs, Type::Num)?;
                expect(rhs, Type::Num)?;
                Ok(Type::Bool)
            }
            _ => {
                expect(lhs, Type::Num)?;
                expect(rhs, Type::Num)?;
                Ok(Type::Num)
            }
        },
        ExprKind::Call { args, .. } => {
            for arg in args {
                expect(arg, Type::Num)?;
            }
            Ok(Type::Num)
        }
    }
}
