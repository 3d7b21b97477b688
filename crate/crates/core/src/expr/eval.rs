use thiserror::Error;

use super::ast::{BinOp, Expr, ExprKind, Func, Span};
use crate::classic::{ord_add, ord_mul, ord_pow};
use crate::cnf::Ordinal;
use crate::error::OrdinalError;
use crate::jacobsthal::{jac_mul, jac_pow};
use crate::natural::{nat_add, nat_mul, nat_ominus};
use crate::superjac::sj_pow;

/// A domain error raised while evaluating the subexpression at `span`.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{source} (at bytes {}..{})", span.start, span.end)]
pub struct EvalError {
    pub span: Span,
    pub source: OrdinalError,
}

pub fn eval(expr: &Expr) -> Result<Ordinal, EvalError> {
    let at = |source| EvalError {
        span: expr.span,
        source,
    };
    match &expr.kind {
        ExprKind::Nat(n) => Ok(Ordinal::from(n.clone())),
        ExprKind::Omega => Ok(Ordinal::omega()),
        ExprKind::Call(func, arg) => {
            let v = eval(arg)?;
            match func {
                Func::Deg => v.deg().map_err(at),
                Func::Wdiv => v.omega_div().map_err(at),
                Func::Succ => Ok(v.succ()),
            }
        }
        ExprKind::Binary(op, l, r) => {
            let (a, b) = (eval(l)?, eval(r)?);
            Ok(match op {
                BinOp::Add => ord_add(&a, &b),
                BinOp::NatAdd => nat_add(&a, &b),
                BinOp::NatMonus => nat_ominus(&a, &b),
                BinOp::Mul => ord_mul(&a, &b),
                BinOp::JacMul => jac_mul(&a, &b),
                BinOp::NatMul => nat_mul(&a, &b),
                BinOp::Pow => ord_pow(&a, &b),
                BinOp::JacPow => jac_pow(&a, &b),
                BinOp::SjPow => sj_pow(&a, &b),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{evaluate, parse, print_text, ExprError};

    fn text(src: &str) -> String {
        print_text(&evaluate(src).unwrap())
    }

    #[test]
    fn operators() {
        assert_eq!(text("(w+2) #^ 2"), "w^2 + w*4 + 4");
        assert_eq!(text("(w+2) j^ 2"), "w^2 + w*2 + 4");
        assert_eq!(text("(w+2) ^ 2"), "w^2 + w*2 + 2");
        assert_eq!(text("(w+2) #* (w+2)"), "w^2 + w*4 + 4");
        assert_eq!(text("2 j* w"), "w");
        assert_eq!(text("w j* 2"), "w*2");
        assert_eq!(text("(1 #+ 1) j* w"), "w");
        assert_eq!(text("1 + w"), "w");
        assert_eq!(text("1 #+ w"), "w + 1");
        assert_eq!(text("w*2 #- w"), "w");
        assert_eq!(text("2 #^ (1 + w)"), "w");
        assert_eq!(text("deg(w^(w+1) + 3)"), "w + 1");
        assert_eq!(text("wdiv(w^2*3 + w)"), "w*3 + 1");
        assert_eq!(text("succ(w)"), "w + 1");
        assert_eq!(text("0 ^ 0"), "1");
    }

    #[test]
    fn domain_errors_carry_span() {
        let src = "1 + wdiv(w+1)";
        let Err(ExprError::Eval(e)) = evaluate(src) else {
            panic!("expected eval error");
        };
        assert_eq!(e.span, Span::new(4, 13));
        assert!(matches!(e.source, OrdinalError::NotDivisibleByOmega(_)));
        let e = eval(&parse("deg(0)").unwrap()).unwrap_err();
        assert_eq!(e.source, OrdinalError::UndefinedDegree);
    }
}
