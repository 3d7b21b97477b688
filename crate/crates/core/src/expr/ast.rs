use std::fmt;

use num_bigint::BigUint;

/// Byte range `[start, end)` in the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }

    pub fn contains(self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    /// `+`
    Add,
    /// `#+` / `⊕`
    NatAdd,
    /// `#-`
    NatMonus,
    /// `*`
    Mul,
    /// `j*` / `×`
    JacMul,
    /// `#*` / `⊗`
    NatMul,
    /// `^`
    Pow,
    /// `j^`
    JacPow,
    /// `#^`
    SjPow,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::NatAdd => "#+",
            BinOp::NatMonus => "#-",
            BinOp::Mul => "*",
            BinOp::JacMul => "j*",
            BinOp::NatMul => "#*",
            BinOp::Pow => "^",
            BinOp::JacPow => "j^",
            BinOp::SjPow => "#^",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Deg,
    Wdiv,
    Succ,
}

impl Func {
    pub fn from_name(name: &str) -> Option<Func> {
        match name {
            "deg" => Some(Func::Deg),
            "wdiv" => Some(Func::Wdiv),
            "succ" => Some(Func::Succ),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Deg => "deg",
            Func::Wdiv => "wdiv",
            Func::Succ => "succ",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Nat(BigUint),
    Omega,
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Parsed ordinal expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn children(&self) -> Vec<&Expr> {
        match &self.kind {
            ExprKind::Nat(_) | ExprKind::Omega => vec![],
            ExprKind::Binary(_, l, r) => vec![l, r],
            ExprKind::Call(_, arg) => vec![arg],
        }
    }
}

/// Fully parenthesized rendering, handy for checking how a string parsed.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Nat(n) => write!(f, "{n}"),
            ExprKind::Omega => f.write_str("w"),
            ExprKind::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            ExprKind::Call(func, arg) => write!(f, "{}({arg})", func.name()),
        }
    }
}
