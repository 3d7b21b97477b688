//! The ordinal expression language: parsing, evaluation and printing.

mod ast;
mod eval;
mod parser;
mod print;

use thiserror::Error;

pub use ast::{BinOp, Expr, ExprKind, Func, Span};
pub use eval::{eval, EvalError};
pub use parser::{parse, ParseError};
pub use print::{parse_json, print_json, print_latex, print_text, JsonError};

use crate::cnf::Ordinal;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl ExprError {
    pub fn span(&self) -> Span {
        match self {
            ExprError::Parse(e) => e.span(),
            ExprError::Eval(e) => e.span,
        }
    }

    /// Two-line rendering with a caret under the offending span.
    pub fn render(&self, src: &str) -> String {
        let span = self.span();
        let col = src[..span.start.min(src.len())].chars().count();
        let width = src
            .get(span.start..span.end)
            .map_or(1, |s| s.chars().count().max(1));
        format!("error: {self}\n  {src}\n  {}{}", " ".repeat(col), "^".repeat(width))
    }
}

/// Parses and evaluates `src`.
pub fn evaluate(src: &str) -> Result<Ordinal, ExprError> {
    Ok(eval(&parse(src)?)?)
}
