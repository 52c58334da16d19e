//! Text syntax for operator expressions.
//!
//! Atoms `A1 A2 A3 X B12 B13 B23`, the scalar variable `s`, rational literals, `+ - * /`,
//! integer powers `^k`, parentheses and `comm(a, b, k)` for `s^k·ab − s^{−k}·ba`. Scalar
//! subexpressions fold into rational functions; `/` needs a scalar divisor.

use pest::iterators::Pair;
use pest::Parser;
use pest_derive::Parser;
use thiserror::Error;

use crate::exactalg::{parse_ratio, Coefficient, RatFunc};
use crate::skeinmod::Loop;

use super::expr::{compose, qcomm, sum, OperatorExpr};

#[derive(Parser)]
#[grammar = "opexpr/expr.pest"]
struct ExprParser;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn at(pair: &Pair<'_, Rule>, message: impl Into<String>) -> Self {
        let (line, col) = pair.as_span().start_pos().line_col();
        ParseError { line, col, message: message.into() }
    }
}

enum Val {
    Scalar(RatFunc),
    Op(OperatorExpr),
}

impl Val {
    fn into_op(self) -> OperatorExpr {
        match self {
            Val::Scalar(c) => OperatorExpr::scalar(c),
            Val::Op(e) => e,
        }
    }

    fn neg(self) -> Val {
        match self {
            Val::Scalar(c) => Val::Scalar(c.neg()),
            Val::Op(e) => Val::Op(e.neg()),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<OperatorExpr, ParseError> {
    let mut pairs = ExprParser::parse(Rule::input, text).map_err(|e| {
        let (line, col) = match e.line_col {
            pest::error::LineColLocation::Pos(p) => p,
            pest::error::LineColLocation::Span(p, _) => p,
        };
        ParseError { line, col, message: e.variant.message().into_owned() }
    })?;
    let input = pairs.next().unwrap();
    let sum_pair = input.into_inner().next().unwrap();
    Ok(build(sum_pair)?.into_op())
}

fn build(pair: Pair<'_, Rule>) -> Result<Val, ParseError> {
    match pair.as_rule() {
        Rule::sum => {
            let mut inner = pair.into_inner();
            let mut acc = build(inner.next().unwrap())?;
            while let Some(op) = inner.next() {
                let rhs = build(inner.next().unwrap())?;
                let rhs = if op.as_str() == "-" { rhs.neg() } else { rhs };
                acc = match (acc, rhs) {
                    (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(a.add(&b)),
                    (a, b) => Val::Op(sum(vec![a.into_op(), b.into_op()])),
                };
            }
            Ok(acc)
        }
        Rule::signed => {
            let mut inner = pair.into_inner().peekable();
            let negate = inner.peek().map(|p| p.as_rule() == Rule::neg).unwrap_or(false);
            if negate {
                inner.next();
            }
            let v = build(inner.next().unwrap())?;
            Ok(if negate { v.neg() } else { v })
        }
        Rule::product => {
            let mut inner = pair.into_inner();
            let mut acc = build(inner.next().unwrap())?;
            while let Some(op) = inner.next() {
                let rhs_pair = inner.next().unwrap();
                let at = rhs_pair.clone();
                let rhs = build(rhs_pair)?;
                acc = if op.as_str() == "/" {
                    let Val::Scalar(d) = rhs else {
                        return Err(ParseError::at(&at, "divisor must be a scalar"));
                    };
                    let inv = d.inv().map_err(|_| ParseError::at(&at, "division by zero"))?;
                    match acc {
                        Val::Scalar(a) => Val::Scalar(a.mul(&inv)),
                        Val::Op(e) => Val::Op(e.scale(inv)),
                    }
                } else {
                    match (acc, rhs) {
                        (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(a.mul(&b)),
                        (Val::Scalar(a), Val::Op(e)) | (Val::Op(e), Val::Scalar(a)) => Val::Op(e.scale(a)),
                        (Val::Op(a), Val::Op(b)) => Val::Op(compose(vec![a, b])),
                    }
                };
            }
            Ok(acc)
        }
        Rule::power => {
            let mut inner = pair.into_inner();
            let base = build(inner.next().unwrap())?;
            let Some(exp) = inner.next() else { return Ok(base) };
            let n: i32 = exp.as_str().parse().map_err(|_| ParseError::at(&exp, "exponent out of range"))?;
            match base {
                Val::Scalar(c) => c.pow(n).map(Val::Scalar).map_err(|_| ParseError::at(&exp, "zero to a negative power")),
                Val::Op(e) if n >= 0 => Ok(Val::Op(e.pow(n as u32))),
                Val::Op(_) => Err(ParseError::at(&exp, "operators have no negative powers")),
            }
        }
        Rule::primary => build(pair.into_inner().next().unwrap()),
        Rule::comm => {
            let mut inner = pair.into_inner();
            let a = build(inner.next().unwrap())?.into_op();
            let b = build(inner.next().unwrap())?.into_op();
            let kp = inner.next().unwrap();
            let k: i32 = kp.as_str().parse().map_err(|_| ParseError::at(&kp, "exponent out of range"))?;
            Ok(Val::Op(qcomm(a, b, k)))
        }
        Rule::atom => {
            let l: Loop = pair.as_str().parse().map_err(|m: String| ParseError::at(&pair, m))?;
            Ok(Val::Op(OperatorExpr::atom(l)))
        }
        Rule::svar => Ok(Val::Scalar(RatFunc::s_pow(1))),
        Rule::number => {
            let r = parse_ratio(pair.as_str()).ok_or_else(|| ParseError::at(&pair, "bad number"))?;
            Ok(Val::Scalar(RatFunc::from_coeff(Coefficient::from_parts(r, num_traits::Zero::zero()))))
        }
        r => Err(ParseError::at(&pair, format!("unexpected {r:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::delta;
    use crate::skeinmod::ThetaAction;

    #[test]
    fn spec_examples() {
        assert!(matches!(parse_expr("B13").unwrap(), OperatorExpr::Atom(Loop::B13)));
        let c = parse_expr("comm(A2,B12,-1)").unwrap();
        assert_eq!(c.loops(), vec![Loop::A2, Loop::B12]);
        let e = parse_expr("(s^2-s^-2)*A1 + B12*B23").unwrap();
        assert_eq!(e.shift_weight(&ThetaAction).unwrap(), 4);
        match &e {
            OperatorExpr::Sum(xs) => match &xs[0] {
                OperatorExpr::Scale(c, _) => assert_eq!(c, &delta()),
                other => panic!("{other:?}"),
            },
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_have_positions() {
        let e = parse_expr("A1 + + B12").unwrap_err();
        assert_eq!((e.line, e.col), (1, 6));
        let e = parse_expr("A1 / B12").unwrap_err();
        assert_eq!(e.col, 6);
        assert!(parse_expr("A4").is_err());
        assert!(parse_expr("A1^-1").is_err());
    }

    #[test]
    fn scalars_fold() {
        let e = parse_expr("-(1/2)*s^2*A1/s").unwrap();
        assert_eq!(e.nominal_weight(), 0);
        assert!(parse_expr("2/3 - s").is_ok());
    }
}
