use std::fmt::Write;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cnf::{make_ordinal, Ordinal};
use crate::error::OrdinalError;

/// Canonical ASCII form, e.g. `w^(w + 1)*3 + w*2 + 7`. Parses back to the
/// same ordinal.
pub fn print_text(a: &Ordinal) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in a.terms().iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        let e = t.exponent();
        if e.is_zero() {
            write!(out, "{}", t.coeff()).unwrap();
            continue;
        }
        out.push('w');
        if *e != Ordinal::one() {
            if e.is_finite() || *e == Ordinal::omega() {
                write!(out, "^{}", print_text(e)).unwrap();
            } else {
                write!(out, "^({})", print_text(e)).unwrap();
            }
        }
        if *t.coeff() != BigUint::from(1u8) {
            write!(out, "*{}", t.coeff()).unwrap();
        }
    }
    out
}

pub fn print_latex(a: &Ordinal) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = a
        .terms()
        .iter()
        .map(|t| {
            let e = t.exponent();
            let c = t.coeff();
            if e.is_zero() {
                return c.to_string();
            }
            let mut s = String::from("\\omega");
            if *e != Ordinal::one() {
                write!(s, "^{{{}}}", print_latex(e)).unwrap();
            }
            if *c != BigUint::from(1u8) {
                write!(s, " \\cdot {c}").unwrap();
            }
            s
        })
        .collect();
    parts.join(" + ")
}

#[derive(Serialize, Deserialize)]
struct JsonOrdinal {
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: JsonOrdinal,
    coeff: String,
}

fn to_json(a: &Ordinal) -> JsonOrdinal {
    JsonOrdinal {
        terms: a
            .terms()
            .iter()
            .map(|t| JsonTerm {
                exp: to_json(t.exponent()),
                coeff: t.coeff().to_string(),
            })
            .collect(),
    }
}

/// `{"terms":[{"exp":<same shape>,"coeff":"<decimal>"}]}`, highest term first.
pub fn print_json(a: &Ordinal) -> String {
    serde_json::to_string(&to_json(a)).expect("plain structs serialize")
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
    #[error("bad coefficient {0:?}")]
    Coefficient(String),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

fn from_json(j: JsonOrdinal) -> Result<Ordinal, JsonError> {
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in j.terms {
        let c = t
            .coeff
            .parse()
            .map_err(|_| JsonError::Coefficient(t.coeff.clone()))?;
        terms.push((from_json(t.exp)?, c));
    }
    Ok(make_ordinal(terms)?)
}

/// Inverse of [`print_json`]; terms may come in any order.
pub fn parse_json(s: &str) -> Result<Ordinal, JsonError> {
    from_json(serde_json::from_str(s)?)
}
