//! Cantor normal form.
//!
//! Every ordinal below ε₀ is stored as a strictly decreasing sequence of
//! terms `ω^e·c` with `c ≥ 1`, where each exponent `e` is itself an
//! [`Ordinal`]. The representation is canonical, so derived structural
//! equality coincides with ordinal equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::OrdinalError;

/// An ordinal below ε₀ in Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Arc<[Term]>,
}

/// One summand `ω^exponent · coeff` of a Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    exponent: Ordinal,
    coeff: BigUint,
}

impl Term {
    /// Panics if `coeff` is zero.
    pub fn new(exponent: Ordinal, coeff: BigUint) -> Self {
        assert!(!coeff.is_zero(), "CNF coefficients are positive");
        Term { exponent, coeff }
    }

    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coeff(&self) -> &BigUint {
        &self.coeff
    }

    pub fn into_parts(self) -> (Ordinal, BigUint) {
        (self.exponent, self.coeff)
    }
}

/// Split of an ordinal into `limit_part + finite_part`, where the limit
/// part is 0 or a limit ordinal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub limit_part: Ordinal,
    pub finite_part: BigUint,
}

impl Decomposition {
    pub fn recompose(&self) -> Ordinal {
        crate::classic::ord_add(&self.limit_part, &Ordinal::from(self.finite_part.clone()))
    }
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal {
            terms: Arc::from(Vec::new()),
        }
    }

    pub fn one() -> Self {
        Self::from(1u64)
    }

    /// The first infinite ordinal.
    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Self::from_sorted(vec![Term::new(exponent, BigUint::one())])
    }

    /// `ω^exponent · coeff`; zero when `coeff` is zero.
    pub fn monomial(exponent: Ordinal, coeff: impl Into<BigUint>) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self::from_sorted(vec![Term::new(exponent, coeff)])
        }
    }

    /// Builds an ordinal from terms already in canonical order.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        debug_assert!(
            terms.windows(2).all(|w| w[0].exponent > w[1].exponent),
            "terms must be strictly decreasing"
        );
        Ordinal {
            terms: Arc::from(terms),
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as a natural number, if finite.
    pub fn as_finite(&self) -> Option<BigUint> {
        match &*self.terms {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.as_finite().and_then(|n| n.to_u64())
    }

    /// Coefficient of the exponent-0 term, or 0.
    pub fn finite_part(&self) -> BigUint {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coeff.clone(),
            _ => BigUint::zero(),
        }
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.terms.last(), Some(t) if !t.exponent.is_zero())
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some(t) if t.exponent.is_zero())
    }

    pub fn succ(&self) -> Ordinal {
        let mut terms = self.terms.to_vec();
        match terms.last_mut() {
            Some(t) if t.exponent.is_zero() => t.coeff += 1u32,
            _ => terms.push(Term::new(Ordinal::zero(), BigUint::one())),
        }
        Ordinal::from_sorted(terms)
    }

    /// Immediate predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.to_vec();
        let last = terms.last_mut().expect("successor has a finite term");
        if last.coeff.is_one() {
            terms.pop();
        } else {
            last.coeff -= 1u32;
        }
        Some(Ordinal::from_sorted(terms))
    }

    pub fn split(&self) -> Decomposition {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => Decomposition {
                limit_part: Ordinal::from_sorted(self.terms[..self.terms.len() - 1].to_vec()),
                finite_part: t.coeff.clone(),
            },
            _ => Decomposition {
                limit_part: self.clone(),
                finite_part: BigUint::zero(),
            },
        }
    }

    /// Largest exponent of the normal form.
    pub fn deg(&self) -> Result<Ordinal, OrdinalError> {
        self.terms
            .first()
            .map(|t| t.exponent.clone())
            .ok_or(OrdinalError::UndefinedDegree)
    }

    /// The unique `β` with `ω·β = self`; defined for 0 and limit ordinals.
    pub fn omega_div(&self) -> Result<Ordinal, OrdinalError> {
        if self.is_successor() {
            return Err(OrdinalError::NotDivisibleByOmega(self.clone()));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.exponent.strip_leading_unit(), t.coeff.clone()))
            .collect();
        Ok(Ordinal::from_sorted(terms))
    }

    /// For `self ≥ 1`, the `δ'` with `1 + δ' = self`: `n-1` when finite,
    /// `self` when infinite.
    pub(crate) fn strip_leading_unit(&self) -> Ordinal {
        debug_assert!(!self.is_zero());
        match self.as_finite() {
            Some(n) => Ordinal::from(n - 1u32),
            None => self.clone(),
        }
    }

    /// `n`-th element of the standard fundamental sequence of a limit ordinal.
    ///
    /// With the last term peeled to coefficient 1, `(γ + ω^(δ+1))[n] = γ + ω^δ·n`
    /// and `(γ + ω^λ)[n] = γ + ω^(λ[n])` for limit `λ`.
    pub fn fund_seq(&self, n: u64) -> Result<Ordinal, OrdinalError> {
        if !self.is_limit() {
            return Err(OrdinalError::NotLimit(self.clone()));
        }
        let mut terms = self.terms.to_vec();
        let last = terms.pop().expect("limit ordinal is nonzero");
        if !last.coeff.is_one() {
            terms.push(Term::new(last.exponent.clone(), &last.coeff - 1u32));
        }
        let tail = if last.exponent.is_successor() {
            let delta = last.exponent.pred().expect("successor exponent");
            Ordinal::monomial(delta, n)
        } else {
            Ordinal::omega_pow(last.exponent.fund_seq(n)?)
        };
        Ok(crate::classic::ord_add(&Ordinal::from_sorted(terms), &tail))
    }
}

/// Canonicalizes a list of `(exponent, coeff)` pairs: merges equal exponents,
/// drops zero coefficients, sorts descending.
pub fn make_ordinal<I>(terms: I) -> Result<Ordinal, OrdinalError>
where
    I: IntoIterator<Item = (Ordinal, BigInt)>,
{
    let mut merged: Vec<(Ordinal, BigUint)> = Vec::new();
    for (exponent, coeff) in terms {
        let coeff = match coeff.sign() {
            Sign::Minus => return Err(OrdinalError::NegativeCoefficient(coeff)),
            Sign::NoSign => continue,
            Sign::Plus => coeff.magnitude().clone(),
        };
        match merged.iter_mut().find(|(e, _)| *e == exponent) {
            Some((_, c)) => *c += coeff,
            None => merged.push((exponent, coeff)),
        }
    }
    merged.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(Ordinal::from_sorted(
        merged.into_iter().map(|(e, c)| Term::new(e, c)).collect(),
    ))
}

/// Smallest ordinal strictly greater than every element (`sup′`).
pub fn lub_strict<'a, I>(set: I) -> Ordinal
where
    I: IntoIterator<Item = &'a Ordinal>,
{
    set.into_iter()
        .max()
        .map(Ordinal::succ)
        .unwrap_or_else(Ordinal::zero)
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.terms, &other.terms) {
            return Ordering::Equal;
        }
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coeff.cmp(&b.coeff));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from(BigUint::from(n))
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }
}

impl Default for Ordinal {
    fn default() -> Self {
        Ordinal::zero()
    }
}

// Unicode rendering, e.g. `ω^(ω + 1)·3 + ω + 4`.
impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            f.write_str("ω")?;
            if t.exponent != Ordinal::one() {
                if t.exponent.is_atomic() {
                    write!(f, "^{}", t.exponent)?;
                } else {
                    write!(f, "^({})", t.exponent)?;
                }
            }
            if !t.coeff.is_one() {
                write!(f, "·{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ordinal {
    /// Natural numbers and bare `ω` print without parentheses in exponents.
    pub(crate) fn is_atomic(&self) -> bool {
        self.as_finite().is_some() || *self == Ordinal::omega()
    }
}
