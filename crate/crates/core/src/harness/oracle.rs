//! Transfinite-recursion oracles: literal successor-stage iteration and
//! limit-stage certificates along fundamental sequences.

use serde::Serialize;

use crate::classic::{ord_add, ord_mul, ord_pow};
use crate::cnf::Ordinal;
use crate::error::OrdinalError;
use crate::jacobsthal::{jac_mul, jac_pow};
use crate::natural::{nat_add, nat_mul};
use crate::superjac::sj_pow;

/// A binary operation iterated on the right by [`iterate_op`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IterOp {
    NatAdd,
    NatMul,
    JacMul,
    OrdMul,
    OrdAdd,
}

impl IterOp {
    pub fn unit(self) -> Ordinal {
        match self {
            IterOp::NatAdd | IterOp::OrdAdd => Ordinal::zero(),
            IterOp::NatMul | IterOp::JacMul | IterOp::OrdMul => Ordinal::one(),
        }
    }

    pub fn apply(self, a: &Ordinal, b: &Ordinal) -> Ordinal {
        match self {
            IterOp::NatAdd => nat_add(a, b),
            IterOp::NatMul => nat_mul(a, b),
            IterOp::JacMul => jac_mul(a, b),
            IterOp::OrdMul => ord_mul(a, b),
            IterOp::OrdAdd => ord_add(a, b),
        }
    }
}

/// `((unit op base) op base) ... op base`, `n` times.
pub fn iterate_op(op: IterOp, base: &Ordinal, n: u64) -> Ordinal {
    (0..n).fold(op.unit(), |acc, _| op.apply(&acc, base))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertResult {
    pub verdict: Verdict,
    pub samples_checked: usize,
    /// The violating sample or unmatched approximant on failure.
    pub witness: Option<Ordinal>,
}

impl CertResult {
    fn pass(samples_checked: usize) -> Self {
        CertResult {
            verdict: Verdict::Pass,
            samples_checked,
            witness: None,
        }
    }

    fn fail(samples_checked: usize, witness: Ordinal) -> Self {
        CertResult {
            verdict: Verdict::Fail,
            samples_checked,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Desk-scale check that `claimed = lim_{γ<β} sample(γ)` for a limit `β`.
///
/// Samples `v_n = sample(β[n])` for `n ≤ n_depth + m_depth` (the extra
/// `m_depth` points absorb index lag between the two sequences) and requires
/// that they are non-decreasing and bounded by `claimed`. A limit claim must be approached:
/// every `claimed[m]`, `m ≤ m_depth`, is at most some `v_n`, and `claimed`
/// itself may only be reached strictly before the last sample. A successor or
/// zero claim must be reached and held by the last two samples.
pub fn limit_certificate(
    claimed: &Ordinal,
    sample: impl Fn(&Ordinal) -> Ordinal,
    beta: &Ordinal,
    m_depth: u64,
    n_depth: u64,
) -> Result<CertResult, OrdinalError> {
    if !beta.is_limit() {
        return Err(OrdinalError::NotLimit(beta.clone()));
    }
    let n_max = n_depth.max(1) + m_depth;
    let mut values = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        values.push(sample(&beta.fund_seq(n)?));
    }
    let checked = values.len();
    for w in values.windows(2) {
        if w[0] > w[1] {
            return Ok(CertResult::fail(checked, w[1].clone()));
        }
    }
    if let Some(v) = values.iter().find(|v| *v > claimed) {
        return Ok(CertResult::fail(checked, v.clone()));
    }
    let last = &values[values.len() - 1];
    if !claimed.is_limit() {
        let held = values[values.len() - 2] == *claimed && last == claimed;
        return Ok(if held {
            CertResult::pass(checked)
        } else {
            CertResult::fail(checked, last.clone())
        });
    }
    if let Some(first_hit) = values.iter().position(|v| v == claimed) {
        if first_hit + 1 == values.len() {
            return Ok(CertResult::fail(checked, last.clone()));
        }
        return Ok(CertResult::pass(checked));
    }
    for m in 0..=m_depth {
        let approx = claimed.fund_seq(m)?;
        if !values.iter().any(|v| approx <= *v) {
            return Ok(CertResult::fail(checked, approx));
        }
    }
    Ok(CertResult::pass(checked))
}

/// An operation defined by transfinite iteration of a step on the right
/// operand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransfiniteOp {
    /// `α + β`, iterating successor.
    OrdAdd,
    /// `α·β`, iterating `+ α`.
    OrdMul,
    /// `α^β`, iterating `· α`.
    OrdPow,
    /// `α × β`, iterating `⊕ α`.
    JacMul,
    /// `α^(×β)`, iterating `× α`.
    JacPow,
    /// `α^(⊗β)`, iterating `⊗ α`.
    SjPow,
}

impl TransfiniteOp {
    /// The closed form under test.
    pub fn closed(self, a: &Ordinal, b: &Ordinal) -> Ordinal {
        match self {
            TransfiniteOp::OrdAdd => ord_add(a, b),
            TransfiniteOp::OrdMul => ord_mul(a, b),
            TransfiniteOp::OrdPow => ord_pow(a, b),
            TransfiniteOp::JacMul => jac_mul(a, b),
            TransfiniteOp::JacPow => jac_pow(a, b),
            TransfiniteOp::SjPow => sj_pow(a, b),
        }
    }

    fn initial(self, a: &Ordinal) -> Ordinal {
        match self {
            TransfiniteOp::OrdAdd => a.clone(),
            TransfiniteOp::OrdMul | TransfiniteOp::JacMul => Ordinal::zero(),
            _ => Ordinal::one(),
        }
    }

    fn step(self, prev: &Ordinal, a: &Ordinal) -> Ordinal {
        match self {
            TransfiniteOp::OrdAdd => prev.succ(),
            TransfiniteOp::OrdMul => ord_add(prev, a),
            TransfiniteOp::OrdPow => ord_mul(prev, a),
            TransfiniteOp::JacMul => nat_add(prev, a),
            TransfiniteOp::JacPow => jac_mul(prev, a),
            TransfiniteOp::SjPow => nat_mul(prev, a),
        }
    }

    fn is_power(self) -> bool {
        matches!(
            self,
            TransfiniteOp::OrdPow | TransfiniteOp::JacPow | TransfiniteOp::SjPow
        )
    }
}

/// Depth settings for [`certify_recursion`].
#[derive(Clone, Copy, Debug)]
pub struct CertDepths {
    pub m_depth: u64,
    pub n_depth: u64,
    /// How many limit stages deep to keep descending.
    pub budget: u32,
}

impl Default for CertDepths {
    fn default() -> Self {
        CertDepths {
            m_depth: 8,
            n_depth: 8,
            budget: 2,
        }
    }
}

const MAX_SUCCESSOR_STEPS: u64 = 256;

/// Checks the closed form of `op` at `(α, β)` against the defining clauses:
/// every successor stage down to the limit part of `β` is re-derived by one
/// step, the limit stage is certified along its fundamental sequence, and
/// the check recurses into a few fundamental-sequence points.
pub fn certify_recursion(
    op: TransfiniteOp,
    alpha: &Ordinal,
    beta: &Ordinal,
    depths: CertDepths,
) -> CertResult {
    let mut checked = 0;
    match certify_inner(op, alpha, beta, depths, depths.budget, &mut checked) {
        Ok(()) => CertResult::pass(checked),
        Err(w) => CertResult::fail(checked, w),
    }
}

fn certify_inner(
    op: TransfiniteOp,
    alpha: &Ordinal,
    beta: &Ordinal,
    depths: CertDepths,
    budget: u32,
    checked: &mut usize,
) -> Result<(), Ordinal> {
    let mut stage = beta.clone();
    let mut value = op.closed(alpha, &stage);
    let mut steps = 0;
    while let Some(prev_stage) = stage.pred() {
        let prev = op.closed(alpha, &prev_stage);
        *checked += 1;
        if op.step(&prev, alpha) != value {
            return Err(stage);
        }
        stage = prev_stage;
        value = prev;
        steps += 1;
        if steps == MAX_SUCCESSOR_STEPS {
            return Ok(());
        }
    }
    if stage.is_zero() {
        *checked += 1;
        return if value == op.initial(alpha) { Ok(()) } else { Err(stage) };
    }
    // 0^γ is 1 at γ = 0 and 0 afterwards, so its samples are not monotone.
    if op.is_power() && alpha.is_zero() {
        *checked += 1;
        return if value.is_zero() { Ok(()) } else { Err(stage) };
    }
    let cert = limit_certificate(
        &value,
        |g| op.closed(alpha, g),
        &stage,
        depths.m_depth,
        depths.n_depth,
    )
    .expect("stage is a limit");
    *checked += cert.samples_checked;
    if !cert.passed() {
        return Err(stage);
    }
    if budget > 0 {
        for n in [1, depths.n_depth.max(1)] {
            let inner = stage.fund_seq(n).expect("stage is a limit");
            certify_inner(op, alpha, &inner, depths, budget - 1, checked)?;
        }
    }
    Ok(())
}
