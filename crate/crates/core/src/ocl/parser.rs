//! Recursive-descent parser. Precedence, loosest first:
//! `or`, `and`, `not`, comparison (non-associative), `+ -`, `* /`, unary `-`, primary.

use super::ast::{BinaryOp, ConstraintDef, Expr, ExprKind, Func, Span, UnaryOp};
use super::lexer::{tokenize, Token, TokenKind};
use super::types::{check_types, Type};
use super::OclError;

pub fn parse_expression(tokens: &[Token]) -> Result<Expr, OclError> {
    let mut parser = Parser::new(tokens);
    let expr = parser.or_expr()?;
    parser.expect_end()?;
    Ok(expr)
}

/// Tokenizes and parses an expression in one step.
pub fn parse_expression_str(source: &str) -> Result<Expr, OclError> {
    parse_expression(&tokenize(source)?)
}

/// Parses `context IDENT inv : expr` and checks that the body is boolean.
pub fn parse_constraint(source: &str) -> Result<ConstraintDef, OclError> {
    let tokens = tokenize(source)?;
    let mut parser = Parser::new(&tokens);
    parser.keyword("context")?;
    let name = parser.ident()?;
    parser.keyword("inv")?;
    parser.op(":")?;
    let body = parser.or_expr()?;
    parser.expect_end()?;

    match check_types(&body)? {
        Type::Bool => Ok(ConstraintDef {
            context_name: name.lexeme.clone(),
            body,
        }),
        Type::Num => Err(OclError::NonBooleanBody { span: body.span }),
    }
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

impl<'t> Parser<'t> {
    fn new(tokens: &'t [Token]) -> Self {
        Parser { tokens, pos: 0 }
    }

    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn peek_at(&self, n: usize) -> Option<&'t Token> {
        self.tokens.get(self.pos + n)
    }

    fn bump(&mut self) -> &'t Token {
        let tok = &self.tokens[self.pos];
        self.pos += 1;
        tok
    }

    fn end_offset(&self) -> usize {
        self.tokens.last().map_or(0, Token::end)
    }

    fn unexpected(&self, expected: &[&str]) -> OclError {
        let (offset, found) = match self.peek() {
            Some(tok) => (tok.offset, format!("'{}'", tok.lexeme)),
            None => (self.end_offset(), "end of input".to_string()),
        };
        OclError::UnexpectedToken {
            offset,
            found,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect_end(&self) -> Result<(), OclError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected(&["end of input"])),
        }
    }

    fn keyword(&mut self, kw: &'static str) -> Result<&'t Token, OclError> {
        match self.peek() {
            Some(tok) if tok.is_keyword(kw) => Ok(self.bump()),
            other => Err(OclError::MissingKeyword {
                keyword: kw,
                offset: other.map_or(self.end_offset(), |t| t.offset),
            }),
        }
    }

    fn op(&mut self, op: &'static str) -> Result<&'t Token, OclError> {
        match self.peek() {
            Some(tok) if tok.is_op(op) => Ok(self.bump()),
            _ => Err(self.unexpected(&[op])),
        }
    }

    fn ident(&mut self) -> Result<&'t Token, OclError> {
        match self.peek() {
            Some(tok) if tok.kind == TokenKind::Ident => Ok(self.bump()),
            _ => Err(self.unexpected(&["identifier"])),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.peek().is_some_and(|t| t.is_keyword(kw)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or_expr(&mut self) -> Result<Expr, OclError> {
        let mut lhs = self.and_expr()?;
        while self.eat_keyword("or") {
            let rhs = self.and_expr()?;
            lhs = binary(BinaryOp::Or, lhs, rhs);
        }
        Ok(lhs)
    }

    fn and_expr(&mut self) -> Result<Expr, OclError> {
        let mut lhs = self.not_expr()?;
        while self.eat_keyword("and") {
            let rhs = self.not_expr()?;
            lhs = binary(BinaryOp::And, lhs, rhs);
        }
        Ok(lhs)
    }

    fn not_expr(&mut self) -> Result<Expr, OclError> {
        if let Some(tok) = self.peek().filter(|t| t.is_keyword("not")) {
            self.pos += 1;
            let operand = self.not_expr()?;
            let span = Span::new(tok.offset, operand.span.end);
            return Ok(Expr::new(
                ExprKind::Unary {
                    op: UnaryOp::Not,
                    operand: Box::new(operand),
                },
                span,
            ));
        }
        self.comparison()
    }

    fn comparison_op(&self) -> Option<BinaryOp> {
        let tok = self.peek().filter(|t| t.kind == TokenKind::Op)?;
        Some(match tok.lexeme.as_str() {
            "=" => BinaryOp::Eq,
            "<>" => BinaryOp::Ne,
            "<" => BinaryOp::Lt,
            "<=" => BinaryOp::Le,
            ">" => BinaryOp::Gt,
            ">=" => BinaryOp::Ge,
            _ => return None,
        })
    }

    fn comparison(&mut self) -> Result<Expr, OclError> {
        let lhs = self.additive()?;
        let Some(op) = self.comparison_op() else {
            return Ok(lhs);
        };
        self.pos += 1;
        let rhs = self.additive()?;
        if self.comparison_op().is_some() {
            return Err(OclError::NonAssociative {
                offset: self.peek().map_or(0, |t| t.offset),
            });
        }
        Ok(binary(op, lhs, rhs))
    }

    fn additive(&mut self) -> Result<Expr, OclError> {
        let mut lhs = self.multiplicative()?;
        loop {
            let op = match self.peek() {
                Some(t) if t.is_op("+") => BinaryOp::Add,
                Some(t) if t.is_op("-") => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.multiplicative()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn multiplicative(&mut self) -> Result<Expr, OclError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(t) if t.is_op("*") => BinaryOp::Mul,
                Some(t) if t.is_op("/") => BinaryOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, OclError> {
        if let Some(tok) = self.peek().filter(|t| t.is_op("-")) {
            self.pos += 1;
            let operand = self.unary()?;
            let span = Span::new(tok.offset, operand.span.end);
            return Ok(Expr::new(
                ExprKind::Unary {
                    op: UnaryOp::Neg,
                    operand: Box::new(operand),
                },
                span,
            ));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, OclError> {
        const EXPECTED: &[&str] = &["number", "identifier", "true", "false", "("];
        let Some(tok) = self.peek() else {
            return Err(self.unexpected(EXPECTED));
        };
        let span = Span::new(tok.offset, tok.end());
        match tok.kind {
            TokenKind::Number => {
                self.pos += 1;
                // the lexer only emits finite decimal lexemes
                let value = tok.lexeme.parse::<f64>().expect("lexer-validated number");
                Ok(Expr::new(ExprKind::Number(value), span))
            }
            TokenKind::Keyword if tok.lexeme == "true" || tok.lexeme == "false" => {
                self.pos += 1;
                Ok(Expr::new(ExprKind::Bool(tok.lexeme == "true"), span))
            }
            TokenKind::Ident => {
                if self.peek_at(1).is_some_and(|t| t.kind == TokenKind::LParen) {
                    return self.call();
                }
                self.pos += 1;
                Ok(Expr::new(ExprKind::Ident(tok.lexeme.clone()), span))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.or_expr()?;
                let close = match self.peek() {
                    Some(t) if t.kind == TokenKind::RParen => self.bump(),
                    _ => return Err(self.unexpected(&[")"])),
                };
                // keep the parenthesised extent so violations point at the whole group
                Ok(Expr::new(inner.kind, Span::new(tok.offset, close.end())))
            }
            _ => Err(self.unexpected(EXPECTED)),
        }
    }

    fn call(&mut self) -> Result<Expr, OclError> {
        let name = self.bump();
        let func = Func::from_name(&name.lexeme).ok_or_else(|| OclError::UnknownFunction {
            name: name.lexeme.clone(),
            offset: name.offset,
        })?;
        self.bump(); // (
        let mut args = Vec::new();
        if !self.peek().is_some_and(|t| t.kind == TokenKind::RParen) {
            loop {
                args.push(self.or_expr()?);
                match self.peek() {
                    Some(t) if t.kind == TokenKind::Comma => self.pos += 1,
                    Some(t) if t.kind == TokenKind::RParen => break,
                    _ => return Err(self.unexpected(&[",", ")"])),
                }
            }
        }
        let close = match self.peek() {
            Some(t) if t.kind == TokenKind::RParen => self.bump(),
            _ => return Err(self.unexpected(&[")"])),
        };
        if args.len() != func.arity() {
            return Err(OclError::Arity {
                func: func.name(),
                expected: func.arity(),
                found: args.len(),
                offset: name.offset,
            });
        }
        Ok(Expr::new(
            ExprKind::Call { func, args },
            Span::new(name.offset, close.end()),
        ))
    }
}

fn binary(op: BinaryOp, lhs: Expr, rhs: Expr) -> Expr {
    let span = lhs.span.to(rhs.span);
    Expr::new(
        ExprKind::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        },
        span,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Expr {
        parse_expression_str(s).unwrap()
    }

    #[test]
    fn multiplication_binds_tighter() {
        let expected = Expr::binary(
            BinaryOp::Add,
            Expr::ident("a"),
            Expr::binary(BinaryOp::Mul, Expr::number(2.0), Expr::ident("b")),
        );
        assert!(parse("a + 2 * b").same_shape(&expected));
    }

    #[test]
    fn interior_diameter_rhs_shape() {
        let expr = parse("external_tip_diameter + 2 * (cone_length * SIN(cone_angle))");
        let expected = Expr::binary(
            BinaryOp::Add,
            Expr::ident("external_tip_diameter"),
            Expr::binary(
                BinaryOp::Mul,
                Expr::number(2.0),
                Expr::binary(
                    BinaryOp::Mul,
                    Expr::ident("cone_length"),
                    Expr::call(Func::Sin, vec![Expr::ident("cone_angle")]),
                ),
            ),
        );
        assert!(expr.same_shape(&expected), "{expr:?}");
        assert_eq!(expr.span, Span::new(0, 59));
    }

    #[test]
    fn chained_comparison_is_rejected() {
        assert!(matches!(
            parse_expression_str("a = b = c"),
            Err(OclError::NonAssociative { offset: 6 })
        ));
    }

    #[test]
    fn subtraction_is_left_associative() {
        let expected = Expr::binary(
            BinaryOp::Sub,
            Expr::binary(BinaryOp::Sub, Expr::ident("a"), Expr::ident("b")),
            Expr::ident("c"),
        );
        assert!(parse("a - b - c").same_shape(&expected));
    }

    #[test]
    fn not_sits_between_and_and_comparison() {
        let expected = Expr::binary(
            BinaryOp::And,
            Expr::unary(
                UnaryOp::Not,
                Expr::binary(BinaryOp::Lt, Expr::ident("a"), Expr::ident("b")),
            ),
            Expr::boolean(true),
        );
        assert!(parse("not a < b and true").same_shape(&expected));
    }

    #[test]
    fn function_names_any_case() {
        assert!(parse("sqrt(x)").same_shape(&parse("SQRT(x)")));
        assert!(parse("Max(x, 1)").same_shape(&parse("MAX(x, 1)")));
    }

    #[test]
    fn arity_and_unknown_function() {
        assert!(matches!(
            parse_expression_str("MIN(1)"),
            Err(OclError::Arity { expected: 2, found: 1, .. })
        ));
        assert!(matches!(
            parse_expression_str("SIN(1, 2)"),
            Err(OclError::Arity { expected: 1, found: 2, .. })
        ));
        assert!(matches!(
            parse_expression_str("LOG(1)"),
            Err(OclError::UnknownFunction { offset: 0, .. })
        ));
    }

    #[test]
    fn trailing_and_missing_input() {
        match parse_expression_str("a + 1 )") {
            Err(OclError::UnexpectedToken { offset, expected, .. }) => {
                assert_eq!(offset, 6);
                assert_eq!(expected, vec!["end of input".to_string()]);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_expression_str("a +"),
            Err(OclError::UnexpectedToken { offset: 3, .. })
        ));
        assert!(matches!(
            parse_expression_str("(a + 1"),
            Err(OclError::UnexpectedToken { offset: 6, .. })
        ));
    }

    #[test]
    fn interior_diameter_constraint_parses() {
        let src = "context interior_diameter inv :\n\
                   interior_diameter = external_tip_diameter + 2 * (cone_length * SIN(cone_angle))";
        let c = parse_constraint(src).unwrap();
        assert_eq!(c.context_name, "interior_diameter");
        assert!(matches!(
            c.body.kind,
            ExprKind::Binary { op: BinaryOp::Eq, .. }
        ));
    }

    #[test]
    fn numeric_body_is_rejected() {
        assert!(matches!(
            parse_constraint("context x inv : 1 + 2"),
            Err(OclError::NonBooleanBody { .. })
        ));
    }

    #[test]
    fn missing_context_keyword() {
        assert!(matches!(
            parse_constraint("inv : a = b"),
            Err(OclError::MissingKeyword { keyword: "context", offset: 0 })
        ));
        assert!(matches!(
            parse_constraint("context x : a = b"),
            Err(OclError::MissingKeyword { keyword: "inv", offset: 10 })
        ));
    }

    #[test]
    fn static_type_mismatch_in_constraint() {
        assert!(matches!(
            parse_constraint("context x inv : 1 and true"),
            Err(OclError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn pretty_print_reparses() {
        for src in [
            "a - (b - c)",
            "-(a + b) * --c",
            "not (a = b) or x < 1 and true",
            "(a < b) = (c > d)",
            "MAX(a, MIN(b, 2.5e-3)) / (1 - a)",
            "not not false",
        ] {
            let e = parse(src);
            let printed = e.to_string();
            assert!(parse(&printed).same_shape(&e), "{src} -> {printed}");
        }
    }
}
