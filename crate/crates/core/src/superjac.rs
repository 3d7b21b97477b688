//! Super-Jacobsthal exponentiation: the transfinite iterate of the natural
//! product.

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::classic::{ord_mul, power_by_squaring};
use crate::cnf::Ordinal;
use crate::error::OrdinalError;
use crate::jacobsthal::jac_mul;
use crate::natural::nat_mul;

/// `a^(⊗b)` for a finite base `a ≥ 2`: with `b = β' + n`, the value is
/// `ω^(β'/ω) · a^n`.
pub fn sj_pow_finite_base(a: &BigUint, b: &Ordinal) -> Result<Ordinal, OrdinalError> {
    if *a < BigUint::from(2u32) {
        return Err(OrdinalError::BaseOutOfRange(a.clone()));
    }
    let split = b.split();
    let head = Ordinal::omega_pow(split.limit_part.omega_div()?);
    Ok(ord_mul(&head, &Ordinal::from(Pow::pow(a, &split.finite_part))))
}

/// Super-Jacobsthal power `a^(⊗b)`, with `a^(⊗0) = 1` and `0^(⊗b) = 0` for
/// `b > 0`.
///
/// An infinite base of degree `d` with `b = β' + n` gives
/// `ω^(d × β') ⊗ a^(⊗n)`, the exponent being a Jacobsthal product.
pub fn sj_pow(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if b.is_zero() {
        return Ordinal::one();
    }
    if a.is_zero() {
        return Ordinal::zero();
    }
    match a.as_finite() {
        Some(k) if k.is_one() => Ordinal::one(),
        Some(k) => sj_pow_finite_base(&k, b).expect("base is at least 2"),
        None => {
            let d = a.deg().expect("nonzero base");
            let split = b.split();
            let head = Ordinal::omega_pow(jac_mul(&d, &split.limit_part));
            let tail = power_by_squaring(a, &split.finite_part, nat_mul);
            nat_mul(&head, &tail)
        }
    }
}
