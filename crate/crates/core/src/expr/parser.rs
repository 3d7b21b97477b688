//! Lexer and precedence-climbing parser for ordinal expressions.
//!
//! Precedence, tightest first: `^ j^ #^` (right-associative), then
//! `* j* #*` (left-associative), then `+ #+` (left-associative) and `#-`,
//! which does not chain with other additive operators.

use std::fmt;

use num_bigint::BigUint;
use super::ast::{BinOp, Expr, ExprKind, Func, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
    pub note: Option<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: ", self.offset)?;
        if let Some(note) = self.note {
            return write!(f, "{note}");
        }
        match self.expected.as_slice() {
            [one] => write!(f, "expected {one}")?,
            many => write!(f, "expected one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    pub fn span(&self) -> Span {
        Span::new(self.offset, self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigUint),
    Omega,
    Ident(String),
    LParen,
    RParen,
    Op(BinOp),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Omega => "`w`".into(),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Op(op) => format!("operator `{}`", op.symbol()),
            Tok::Eof => "end of input".into(),
        }
    }
}

const OPERAND: &[&str] = &["number", "`w`", "`(`", "function call"];
const AFTER_OPERAND: &[&str] = &["operator", "`)`", "end of input"];

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let two = |next: char| src[i + c.len_utf8()..].starts_with(next);
        let (tok, len) = match c {
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '+' => (Tok::Op(BinOp::Add), 1),
            '*' => (Tok::Op(BinOp::Mul), 1),
            '^' => (Tok::Op(BinOp::Pow), 1),
            'ω' => (Tok::Omega, c.len_utf8()),
            '⊕' => (Tok::Op(BinOp::NatAdd), c.len_utf8()),
            '⊗' => (Tok::Op(BinOp::NatMul), c.len_utf8()),
            '×' => (Tok::Op(BinOp::JacMul), c.len_utf8()),
            '#' if two('+') => (Tok::Op(BinOp::NatAdd), 2),
            '#' if two('-') => (Tok::Op(BinOp::NatMonus), 2),
            '#' if two('*') => (Tok::Op(BinOp::NatMul), 2),
            '#' if two('^') => (Tok::Op(BinOp::SjPow), 2),
            'j' if two('*') => (Tok::Op(BinOp::JacMul), 2),
            'j' if two('^') => (Tok::Op(BinOp::JacPow), 2),
            '0'..='9' => {
                let len = src[i..]
                    .find(|ch: char| !ch.is_ascii_digit())
                    .unwrap_or(src.len() - i);
                let n: BigUint = src[i..i + len].parse().expect("ascii digits");
                (Tok::Num(n), len)
            }
            c if c.is_alphabetic() => {
                let len = src[i..]
                    .find(|ch: char| !ch.is_alphanumeric() && ch != '_')
                    .unwrap_or(src.len() - i);
                let word = &src[i..i + len];
                let tok = if word == "w" { Tok::Omega } else { Tok::Ident(word.to_string()) };
                (tok, len)
            }
            other => {
                return Err(ParseError {
                    offset: i,
                    expected: vec!["a token"],
                    found: format!("character `{other}`"),
                    note: None,
                })
            }
        };
        out.push((tok, Span::new(i, i + len)));
        while chars.peek().is_some_and(|&(j, _)| j < i + len) {
            chars.next();
        }
    }
    out.push((Tok::Eof, Span::new(src.len(), src.len())));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, Span) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (tok, span) = self.peek();
        ParseError {
            offset: span.start,
            expected: expected.to_vec(),
            found: tok.describe(),
            note: None,
        }
    }

    fn peek_op(&self, ops: &[BinOp]) -> Option<BinOp> {
        match &self.peek().0 {
            Tok::Op(op) if ops.contains(op) => Some(*op),
            _ => None,
        }
    }

    fn additive(&mut self) -> Result<Expr, ParseError> {
        const ADD: &[BinOp] = &[BinOp::Add, BinOp::NatAdd, BinOp::NatMonus];
        let mut lhs = self.multiplicative()?;
        let mut chained = 0;
        let mut monus = false;
        while let Some(op) = self.peek_op(ADD) {
            if monus || (op == BinOp::NatMonus && chained > 0) {
                let span = self.peek().1;
                return Err(ParseError {
                    offset: span.start,
                    expected: vec![],
                    found: format!("operator `{}`", op.symbol()),
                    note: Some("`#-` does not chain with other additive operators; add parentheses"),
                });
            }
            self.bump();
            monus = op == BinOp::NatMonus;
            chained += 1;
            let rhs = self.multiplicative()?;
            lhs = binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn multiplicative(&mut self) -> Result<Expr, ParseError> {
        const MUL: &[BinOp] = &[BinOp::Mul, BinOp::JacMul, BinOp::NatMul];
        let mut lhs = self.power()?;
        while let Some(op) = self.peek_op(MUL) {
            self.bump();
            let rhs = self.power()?;
            lhs = binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        const POW: &[BinOp] = &[BinOp::Pow, BinOp::JacPow, BinOp::SjPow];
        let base = self.atom()?;
        match self.peek_op(POW) {
            Some(op) => {
                self.bump();
                let exponent = self.power()?;
                Ok(binary(op, base, exponent))
            }
            None => Ok(base),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, span) = self.peek().clone();
        match tok {
            Tok::Num(n) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Nat(n),
                    span,
                })
            }
            Tok::Omega => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Omega,
                    span,
                })
            }
            Tok::LParen => {
                self.bump();
                let mut inner = self.additive()?;
                let close = self.expect_close()?;
                inner.span = span.join(close);
                Ok(inner)
            }
            Tok::Ident(name) => {
                let Some(func) = Func::from_name(&name) else {
                    return Err(ParseError {
                        offset: span.start,
                        expected: vec!["`deg`", "`wdiv`", "`succ`", "`w`"],
                        found: format!("identifier `{name}`"),
                        note: None,
                    });
                };
                self.bump();
                if self.peek().0 != Tok::LParen {
                    return Err(self.error(&["`(`"]));
                }
                self.bump();
                let arg = self.additive()?;
                let close = self.expect_close()?;
                Ok(Expr {
                    kind: ExprKind::Call(func, Box::new(arg)),
                    span: span.join(close),
                })
            }
            _ => Err(self.error(OPERAND)),
        }
    }

    fn expect_close(&mut self) -> Result<Span, ParseError> {
        match self.peek() {
            (Tok::RParen, span) => {
                let span = *span;
                self.bump();
                Ok(span)
            }
            _ => Err(self.error(&["operator", "`)`"])),
        }
    }
}

fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
    let span = lhs.span.join(rhs.span);
    Expr {
        kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
        span,
    }
}

/// Parses one expression spanning the whole input.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let expr = p.additive()?;
    if p.peek().0 != Tok::Eof {
        return Err(p.error(AFTER_OPERAND));
    }
    Ok(expr)
}
