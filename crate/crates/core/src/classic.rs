//! Ordinary ordinal addition, multiplication and exponentiation.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::cnf::{Ordinal, Term};

/// Ordinal sum `a + b`.
pub fn ord_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let Some(lead) = b.leading() else {
        return a.clone();
    };
    let e = lead.exponent();
    let mut terms: Vec<Term> = a
        .terms()
        .iter()
        .take_while(|t| t.exponent() >= e)
        .cloned()
        .collect();
    let mut rest = b.terms().iter();
    match terms.last_mut() {
        Some(t) if t.exponent() == e => {
            let merged = t.coeff() + lead.coeff();
            *t = Term::new(e.clone(), merged);
            rest.next();
        }
        _ => {}
    }
    terms.extend(rest.cloned());
    Ordinal::from_sorted(terms)
}

/// Ordinal product `a · b`.
pub fn ord_mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let (Some(a_lead), false) = (a.leading(), b.is_zero()) else {
        return Ordinal::zero();
    };
    let deg_a = a_lead.exponent();
    let mut terms = Vec::with_capacity(b.terms().len() + a.terms().len());
    for t in b.terms() {
        if t.exponent().is_zero() {
            terms.push(Term::new(deg_a.clone(), a_lead.coeff() * t.coeff()));
            terms.extend(a.terms()[1..].iter().cloned());
        } else {
            terms.push(Term::new(ord_add(deg_a, t.exponent()), t.coeff().clone()));
        }
    }
    Ordinal::from_sorted(terms)
}

/// Ordinal power `a ^ b`, with `0^0 = 1`.
///
/// For a finite base `k ≥ 2` and `b = β' + n` this is `ω^(β'/ω) · k^n`; for an
/// infinite base of degree `d` it is `ω^(d·β') · a^n`.
pub fn ord_pow(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if b.is_zero() {
        return Ordinal::one();
    }
    if a.is_zero() {
        return Ordinal::zero();
    }
    let split = b.split();
    match a.as_finite() {
        Some(k) if k.is_one() => Ordinal::one(),
        Some(k) => {
            let head = Ordinal::omega_pow(
                split
                    .limit_part
                    .omega_div()
                    .expect("limit part is divisible by ω"),
            );
            ord_mul(&head, &Ordinal::from(Pow::pow(k, &split.finite_part)))
        }
        None => {
            let d = a.deg().expect("nonzero base");
            let head = Ordinal::omega_pow(ord_mul(&d, &split.limit_part));
            let tail = power_by_squaring(a, &split.finite_part, ord_mul);
            ord_mul(&head, &tail)
        }
    }
}

/// `base` combined with itself `n` times under an associative operation
/// whose unit is 1.
pub(crate) fn power_by_squaring(
    base: &Ordinal,
    n: &BigUint,
    op: impl Fn(&Ordinal, &Ordinal) -> Ordinal,
) -> Ordinal {
    let mut acc = Ordinal::one();
    if n.is_zero() {
        return acc;
    }
    let bits = n.bits();
    for i in (0..bits).rev() {
        acc = op(&acc, &acc);
        if n.bit(i) {
            acc = op(&acc, base);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn n(k: u64) -> Ordinal {
        Ordinal::from(k)
    }

    fn add(a: &Ordinal, b: &Ordinal) -> Ordinal {
        ord_add(a, b)
    }

    // ω^2 + ω·k + m
    fn quad(a: u64, k: u64, m: u64) -> Ordinal {
        let p = add(
            &Ordinal::monomial(n(2), a),
            &Ordinal::monomial(n(1), k),
        );
        add(&p, &n(m))
    }

    #[test]
    fn addition() {
        assert_eq!(ord_add(&n(1), &w()), w());
        assert_eq!(ord_add(&w(), &n(1)), w().succ());
        let lhs = quad(1, 1, 0);
        let rhs = add(&Ordinal::monomial(n(1), 3u64), &n(5));
        assert_eq!(ord_add(&lhs, &rhs), quad(1, 4, 5));
        assert_eq!(ord_add(&n(3), &n(4)), n(7));
        assert_eq!(ord_add(&w(), &Ordinal::zero()), w());
    }

    #[test]
    fn addition_by_successor_recursion() {
        let a = quad(1, 1, 0);
        let mut expected = ord_add(&a, &Ordinal::monomial(n(1), 3u64));
        for k in 1..=5 {
            expected = expected.succ();
            let b = add(&Ordinal::monomial(n(1), 3u64), &n(k));
            assert_eq!(ord_add(&a, &b), expected);
        }
    }

    #[test]
    fn multiplication() {
        assert_eq!(ord_mul(&n(2), &w()), w());
        assert_eq!(ord_mul(&ord_add(&n(1), &n(1)), &w()), w());
        let w2 = add(&w(), &n(2));
        assert_eq!(ord_mul(&w2, &w2), quad(1, 2, 2));
        assert_eq!(ord_mul(&w(), &n(2)), Ordinal::monomial(n(1), 2u64));
        assert_eq!(ord_mul(&n(6), &n(7)), n(42));
        assert_eq!(ord_mul(&Ordinal::zero(), &w()), Ordinal::zero());
    }

    #[test]
    fn multiplication_is_repeated_addition() {
        let a = quad(2, 1, 3);
        let mut acc = Ordinal::zero();
        for k in 0..6 {
            assert_eq!(ord_mul(&a, &n(k)), acc);
            acc = ord_add(&acc, &a);
        }
    }

    #[test]
    fn exponentiation() {
        let w2 = add(&w(), &n(2));
        assert_eq!(ord_pow(&w2, &n(2)), quad(1, 2, 2));
        assert_eq!(ord_pow(&n(2), &w()), w());
        assert_eq!(ord_pow(&Ordinal::zero(), &Ordinal::zero()), n(1));
        assert_eq!(ord_pow(&Ordinal::zero(), &w()), Ordinal::zero());
        assert_eq!(ord_pow(&n(1), &w()), n(1));
        assert_eq!(ord_pow(&n(3), &n(4)), n(81));
        assert_eq!(ord_pow(&w(), &w()), Ordinal::omega_pow(w()));
        // 2^(ω+3) = ω·8
        assert_eq!(ord_pow(&n(2), &w().succ().succ().succ()), Ordinal::monomial(n(1), 8u64));
        // (ω+1)^ω = ω^ω
        assert_eq!(ord_pow(&w().succ(), &w()), Ordinal::omega_pow(w()));
    }

    #[test]
    fn exponentiation_is_repeated_multiplication() {
        for a in [n(3), w().succ(), quad(1, 2, 2)] {
            let mut acc = Ordinal::one();
            for k in 0..6 {
                assert_eq!(ord_pow(&a, &n(k)), acc, "{a}^{k}");
                acc = ord_mul(&acc, &a);
            }
        }
    }
}
