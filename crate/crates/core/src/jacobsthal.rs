//! Jacobsthal multiplication (transfinitely iterated natural sum) and
//! Jacobsthal exponentiation (transfinitely iterated Jacobsthal product).

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::classic::{ord_add, ord_mul, power_by_squaring};
use crate::cnf::{Ordinal, Term};

/// `a` natural-summed with itself `n` times: every coefficient scaled by `n`.
pub(crate) fn scale(a: &Ordinal, n: &BigUint) -> Ordinal {
    if n.is_zero() {
        return Ordinal::zero();
    }
    Ordinal::from_sorted(
        a.terms()
            .iter()
            .map(|t| Term::new(t.exponent().clone(), t.coeff() * n))
            .collect(),
    )
}

/// Jacobsthal product `a × b`.
///
/// Writing `b = β' + n` with `β'` zero or a limit, `a × b = ω^(deg a)·β' + a×n`,
/// where `a×n` scales every coefficient of `a` by `n`.
pub fn jac_mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let Ok(d) = a.deg() else {
        return Ordinal::zero();
    };
    let split = b.split();
    let head = ord_mul(&Ordinal::omega_pow(d), &split.limit_part);
    ord_add(&head, &scale(a, &split.finite_part))
}

/// Jacobsthal power `a^(×b)`, with `a^(×0) = 1`.
///
/// For `b = β' + n`: a finite base `k ≥ 2` gives `ω^(β'/ω) · k^n`; an infinite
/// base of degree `d` gives `ω^(d·β') × a^(×n)`.
pub fn jac_pow(a: &Ordinal, b: &Ordinal) -> Ordinal {
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
            jac_mul(&head, &Ordinal::from(Pow::pow(k, &split.finite_part)))
        }
        None => {
            let d = a.deg().expect("nonzero base");
            let head = Ordinal::omega_pow(ord_mul(&d, &split.limit_part));
            let tail = power_by_squaring(a, &split.finite_part, jac_mul);
            jac_mul(&head, &tail)
        }
    }
}
