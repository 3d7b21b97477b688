//! Natural (Hessenberg) sum and product, natural monus, and the Conway
//! characterization of the natural product as a checkable oracle.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::cnf::{Ordinal, Term};
use crate::error::OrdinalError;

/// Natural sum: coefficient-wise addition of normal forms.
pub fn nat_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (xs, ys) = (a.terms(), b.terms());
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].exponent().cmp(ys[j].exponent()) {
            Ordering::Greater => {
                out.push(xs[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(ys[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(Term::new(
                    xs[i].exponent().clone(),
                    xs[i].coeff() + ys[j].coeff(),
                ));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&xs[i..]);
    out.extend_from_slice(&ys[j..]);
    Ordinal::from_sorted(out)
}

/// Natural product: polynomial multiplication with exponents combined by
/// natural sum.
pub fn nat_mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.is_zero() || b.is_zero() {
        return Ordinal::zero();
    }
    if *a == Ordinal::one() {
        return b.clone();
    }
    if *b == Ordinal::one() {
        return a.clone();
    }
    let mut acc: BTreeMap<Ordinal, BigUint> = BTreeMap::new();
    for x in a.terms() {
        for y in b.terms() {
            let e = nat_add(x.exponent(), y.exponent());
            *acc.entry(e).or_default() += x.coeff() * y.coeff();
        }
    }
    Ordinal::from_sorted(
        acc.into_iter()
            .rev()
            .map(|(e, c)| Term::new(e, c))
            .collect(),
    )
}

/// Natural monus: the least `γ` with `b ⊕ γ ≥ a`.
///
/// Walks both normal forms from the top. At the first exponent where the
/// coefficients differ, either `b` is already ahead (stop) or the gap is
/// emitted and the comparison continues on the lower tails.
pub fn nat_ominus(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let (xs, ys) = (a.terms(), b.terms());
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    loop {
        let (x, y) = (xs.get(i), ys.get(j));
        match (x, y) {
            (None, _) => break,
            (Some(_), None) => {
                out.extend_from_slice(&xs[i..]);
                break;
            }
            (Some(x), Some(y)) => match x.exponent().cmp(y.exponent()) {
                Ordering::Less => break,
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Equal => {
                    match x.coeff().cmp(y.coeff()) {
                        Ordering::Less => break,
                        Ordering::Greater => {
                            out.push(Term::new(x.exponent().clone(), x.coeff() - y.coeff()))
                        }
                        Ordering::Equal => {}
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
    Ordinal::from_sorted(out)
}

/// `f_{α,β}(α', β') = ((α ⊗ β') ⊕ (α' ⊗ β)) ⊖ (α' ⊗ β')`, defined for
/// `α' < α` and `β' < β`.
pub fn conway_f(
    alpha: &Ordinal,
    beta: &Ordinal,
    alpha_p: &Ordinal,
    beta_p: &Ordinal,
) -> Result<Ordinal, OrdinalError> {
    if alpha_p >= alpha || beta_p >= beta {
        return Err(OrdinalError::Precondition(format!(
            "conway_f needs α' < α and β' < β, got α={alpha} β={beta} α'={alpha_p} β'={beta_p}"
        )));
    }
    let cross = nat_add(&nat_mul(alpha, beta_p), &nat_mul(alpha_p, beta));
    Ok(nat_ominus(&cross, &nat_mul(alpha_p, beta_p)))
}

const FINITE_CAP: u64 = 64;

/// A finite, sorted sample of the ordinals below `a`.
///
/// All of them when `a` is a small natural number; for a limit, the
/// fundamental-sequence values at `0..=depth` and their successors; for an
/// infinite successor `γ + k`, the values `γ + i` (`i < k`) plus the sample
/// below `γ`.
pub fn sample_predecessors(a: &Ordinal, depth: u64) -> Vec<Ordinal> {
    let mut out = Vec::new();
    let split = a.split();
    let k = split.finite_part;
    let base = split.limit_part;
    let finite_offsets: Vec<BigUint> = match k.to_u64() {
        Some(k) if k <= FINITE_CAP => (0..k).map(BigUint::from).collect(),
        _ => {
            let low = (0..=depth).map(BigUint::from);
            let high = (1..=depth + 1).map(|d| &k - d);
            low.chain(high).filter(|x| x < &k).collect()
        }
    };
    for off in finite_offsets {
        out.push(crate::classic::ord_add(&base, &Ordinal::from(off)));
    }
    if base.is_limit() {
        for n in 0..=depth {
            let v = base.fund_seq(n).expect("limit");
            out.push(v.succ());
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A sampled pair `(α', β')` at which `claimed` fails to exceed `f_{α,β}`.
pub fn conway_violation(
    alpha: &Ordinal,
    beta: &Ordinal,
    claimed: &Ordinal,
    depth: u64,
) -> Option<(Ordinal, Ordinal)> {
    let depth = depth.max(1);
    let alpha_preds = sample_predecessors(alpha, depth);
    let beta_preds = sample_predecessors(beta, depth);
    let alpha_row: Vec<Ordinal> = beta_preds.iter().map(|bp| nat_mul(alpha, bp)).collect();
    for ap in &alpha_preds {
        let ap_beta = nat_mul(ap, beta);
        for (bp, a_bp) in beta_preds.iter().zip(&alpha_row) {
            let lhs = nat_add(claimed, &nat_mul(ap, bp));
            let rhs = nat_add(a_bp, &ap_beta);
            if lhs <= rhs {
                return Some((ap.clone(), bp.clone()));
            }
        }
    }
    None
}

/// Necessary-condition check of `claimed = α ⊗ β` against Conway's
/// characterization on sampled predecessors. A `true` result does not
/// establish minimality.
pub fn conway_witness_check(alpha: &Ordinal, beta: &Ordinal, claimed: &Ordinal, depth: u64) -> bool {
    conway_violation(alpha, beta, claimed, depth).is_none()
}
