//! Seeded random ordinal generation.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::HarnessError;
use crate::cnf::{Ordinal, Term};

/// Bounds and seed for [`gen_ordinal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenParams {
    /// Exponent nesting bound: depth 0 yields naturals, depth `d` stays below
    /// a tower of `d + 1` omegas.
    pub max_depth: u32,
    pub max_terms: u32,
    pub max_coeff: u64,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            max_depth: 2,
            max_terms: 3,
            max_coeff: 5,
            seed: 0,
        }
    }
}

impl GenParams {
    pub fn with_seed(self, seed: u64) -> Self {
        GenParams { seed, ..self }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.max_terms == 0 || self.max_coeff == 0 {
            return Err(HarnessError::InvalidParams(format!(
                "max_terms and max_coeff must be at least 1 (got {} and {})",
                self.max_terms, self.max_coeff
            )));
        }
        Ok(())
    }
}

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Seed of one law trial, a pure function of `(master, law_id, trial)`.
pub fn trial_seed(master: u64, law_id: &str, trial: u64) -> u64 {
    mix64(mix64(master ^ fnv1a(law_id)) ^ mix64(trial.wrapping_add(0x5851_f42d_4c95_7f2d)))
}

fn stream_rng(params: &GenParams, stream_index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix64(params.seed ^ mix64(stream_index)))
}

/// Deterministic ordinal for `(params, stream_index)`, mixing zero, finite,
/// successor and limit shapes.
pub fn gen_ordinal(params: &GenParams, stream_index: u64) -> Ordinal {
    let mut rng = stream_rng(params, stream_index);
    gen_with(&mut rng, params, params.max_depth)
}

/// Like [`gen_ordinal`] but always a limit ordinal (at depth 0 this is `ω`).
pub fn gen_limit_ordinal(params: &GenParams, stream_index: u64) -> Ordinal {
    let mut rng = stream_rng(params, stream_index);
    let depth = params.max_depth.max(1);
    for _ in 0..64 {
        let limit = gen_with(&mut rng, params, depth).split().limit_part;
        if !limit.is_zero() {
            return limit;
        }
    }
    Ordinal::omega()
}

fn gen_coeff(rng: &mut impl Rng, params: &GenParams) -> u64 {
    rng.gen_range(1..=params.max_coeff.max(1))
}

fn gen_with(rng: &mut impl Rng, params: &GenParams, depth: u32) -> Ordinal {
    if depth == 0 {
        return Ordinal::from(rng.gen_range(0..=params.max_coeff));
    }
    match rng.gen_range(0..10) {
        0 => Ordinal::zero(),
        1 | 2 => Ordinal::from(gen_coeff(rng, params)),
        _ => {
            let n_terms = rng.gen_range(1..=params.max_terms.max(1));
            let mut terms: BTreeMap<Ordinal, u64> = BTreeMap::new();
            for _ in 0..n_terms {
                let mut e = gen_with(rng, params, depth - 1);
                if e.is_zero() {
                    e = Ordinal::one();
                }
                let c = gen_coeff(rng, params);
                terms.entry(e).or_insert(c);
            }
            let mut terms: Vec<Term> = terms
                .into_iter()
                .rev()
                .map(|(e, c)| Term::new(e, BigUint::from(c)))
                .collect();
            if rng.gen_bool(0.5) {
                terms.push(Term::new(
                    Ordinal::zero(),
                    BigUint::from(gen_coeff(rng, params)),
                ));
            }
            Ordinal::from_sorted(terms)
        }
    }
}
