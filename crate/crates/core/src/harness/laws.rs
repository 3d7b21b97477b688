//! The law catalog and its seeded checker.
//!
//! Positive laws are expected to hold on every trial; negative laws are
//! plausible-looking false variants that must produce a counterexample.
//! Each negative law forces its known counterexample as trial 0.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::gen::{gen_ordinal, trial_seed, GenParams};
use super::HarnessError;
use crate::classic::{ord_add, ord_mul, ord_pow};
use crate::cnf::Ordinal;
use crate::expr::print_text;
use crate::jacobsthal::{jac_mul, jac_pow};
use crate::natural::{conway_f, conway_violation, nat_add, nat_mul, nat_ominus, sample_predecessors};
use crate::superjac::sj_pow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Holds,
    Fails,
}

/// Result of evaluating one law on one input tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub holds: bool,
    pub lhs: Ordinal,
    pub rhs: Ordinal,
}

impl Outcome {
    fn eq(lhs: Ordinal, rhs: Ordinal) -> Self {
        Outcome {
            holds: lhs == rhs,
            lhs,
            rhs,
        }
    }

    fn le(lhs: Ordinal, rhs: Ordinal) -> Self {
        Outcome {
            holds: lhs <= rhs,
            lhs,
            rhs,
        }
    }

    fn vacuous() -> Self {
        Outcome {
            holds: true,
            lhs: Ordinal::zero(),
            rhs: Ordinal::zero(),
        }
    }

    fn and(self, next: impl FnOnce() -> Outcome) -> Self {
        if self.holds {
            next()
        } else {
            self
        }
    }
}

pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    pub polarity: Polarity,
    /// Inclusive bounds on the number of generated inputs.
    pub arity: (usize, usize),
    /// `(row, column)` cell in the law grid, if the law belongs to it.
    pub grid: Option<(usize, usize)>,
    forced: Option<fn() -> Vec<Ordinal>>,
    check: fn(&[Ordinal]) -> Outcome,
}

impl Law {
    pub fn check(&self, inputs: &[Ordinal]) -> Outcome {
        (self.check)(inputs)
    }

    pub fn forced_inputs(&self) -> Option<Vec<Ordinal>> {
        self.forced.map(|f| f())
    }
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law").field("id", &self.id).finish()
    }
}

/// Row labels of the law grid.
pub const GRID_ROWS: [&str; 5] = [
    "addition is associative",
    "multiplication distributes on the left",
    "multiplication is associative",
    "power of a sum",
    "power of a product",
];

/// Column labels of the law grid: the operation each family iterates.
pub const GRID_COLUMNS: [&str; 3] = ["successor", "natural sum", "natural product"];

fn w() -> Ordinal {
    Ordinal::omega()
}

fn n(k: u64) -> Ordinal {
    Ordinal::from(k)
}

fn law_ord_add_assoc(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(ord_add(a, &ord_add(b, c)), ord_add(&ord_add(a, b), c))
}

fn law_ord_left_distrib(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(ord_mul(a, &ord_add(b, c)), ord_add(&ord_mul(a, b), &ord_mul(a, c)))
}

fn law_ord_mul_assoc(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(ord_mul(a, &ord_mul(b, c)), ord_mul(&ord_mul(a, b), c))
}

fn law_ord_pow_add(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(ord_pow(a, &ord_add(b, c)), ord_mul(&ord_pow(a, b), &ord_pow(a, c)))
}

fn law_ord_pow_mul(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(ord_pow(a, &ord_mul(b, c)), ord_pow(&ord_pow(a, b), c))
}

fn law_nat_add_assoc(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(nat_add(a, &nat_add(b, c)), nat_add(&nat_add(a, b), c))
}

fn law_jacthm(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(jac_mul(a, &nat_add(b, c)), nat_add(&jac_mul(a, b), &jac_mul(a, c)))
}

fn law_jac_mul_assoc(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(jac_mul(a, &jac_mul(b, c)), jac_mul(&jac_mul(a, b), c))
}

fn law_jac_pow_add(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(jac_pow(a, &ord_add(b, c)), jac_mul(&jac_pow(a, b), &jac_pow(a, c)))
}

fn law_jac_pow_mul(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(jac_pow(a, &ord_mul(b, c)), jac_pow(&jac_pow(a, b), c))
}

fn law_nat_distrib(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(nat_mul(a, &nat_add(b, c)), nat_add(&nat_mul(a, b), &nat_mul(a, c)))
}

fn law_nat_right_distrib(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(nat_mul(&nat_add(b, c), a), nat_add(&nat_mul(b, a), &nat_mul(c, a)))
}

fn law_nat_mul_assoc(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(nat_mul(a, &nat_mul(b, c)), nat_mul(&nat_mul(a, b), c))
}

fn law_mainthm(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(sj_pow(a, &nat_add(b, c)), nat_mul(&sj_pow(a, b), &sj_pow(a, c)))
}

fn law_maincor(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(sj_pow(a, &jac_mul(b, c)), sj_pow(&sj_pow(a, b), c))
}

fn law_maincor_finite(x: &[Ordinal]) -> Outcome {
    let (a, betas) = (&x[0], &x[1..]);
    let sum = betas.iter().fold(Ordinal::zero(), |acc, b| nat_add(&acc, b));
    let product = betas
        .iter()
        .fold(Ordinal::one(), |acc, b| nat_mul(&acc, &sj_pow(a, b)));
    Outcome::eq(sj_pow(a, &sum), product)
}

fn law_nat_add_comm(x: &[Ordinal]) -> Outcome {
    Outcome::eq(nat_add(&x[0], &x[1]), nat_add(&x[1], &x[0]))
}

fn law_nat_mul_comm(x: &[Ordinal]) -> Outcome {
    Outcome::eq(nat_mul(&x[0], &x[1]), nat_mul(&x[1], &x[0]))
}

fn law_nat_add_strict(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    let (lhs, rhs) = (nat_add(a, b), nat_add(a, c));
    Outcome {
        holds: lhs.cmp(&rhs) == b.cmp(c),
        lhs,
        rhs,
    }
}

fn law_nat_mul_strict(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    if a.is_zero() {
        return Outcome::vacuous();
    }
    let (lhs, rhs) = (nat_mul(a, b), nat_mul(a, c));
    Outcome {
        holds: lhs.cmp(&rhs) == b.cmp(c),
        lhs,
        rhs,
    }
}

fn law_deg_nat_mul(x: &[Ordinal]) -> Outcome {
    let (a, b) = (&x[0], &x[1]);
    match (a.deg(), b.deg()) {
        (Ok(da), Ok(db)) => Outcome::eq(nat_mul(a, b).deg().expect("nonzero"), nat_add(&da, &db)),
        _ => Outcome::vacuous(),
    }
}

fn law_omega_jac(x: &[Ordinal]) -> Outcome {
    Outcome::eq(ord_mul(&w(), &x[0]), jac_mul(&w(), &x[0]))
}

fn law_chain_add(x: &[Ordinal]) -> Outcome {
    Outcome::le(ord_add(&x[0], &x[1]), nat_add(&x[0], &x[1]))
}

fn law_chain_mul(x: &[Ordinal]) -> Outcome {
    let (a, b) = (&x[0], &x[1]);
    let jac = jac_mul(a, b);
    Outcome::le(ord_mul(a, b), jac.clone()).and(|| Outcome::le(jac, nat_mul(a, b)))
}

fn law_chain_pow(x: &[Ordinal]) -> Outcome {
    let (a, b) = (&x[0], &x[1]);
    let jac = jac_pow(a, b);
    Outcome::le(ord_pow(a, b), jac.clone()).and(|| Outcome::le(jac, sj_pow(a, b)))
}

fn law_monus_least(x: &[Ordinal]) -> Outcome {
    let (a, b) = (&x[0], &x[1]);
    let g = nat_ominus(a, b);
    let reach = Outcome::le(a.clone(), nat_add(b, &g));
    reach.and(|| {
        let below: Vec<Ordinal> = if g.is_limit() {
            (0..=8).map(|k| g.fund_seq(k).expect("limit")).collect()
        } else {
            g.pred().into_iter().collect()
        };
        for smaller in below {
            let got = nat_add(b, &smaller);
            if got >= *a {
                return Outcome {
                    holds: false,
                    lhs: got,
                    rhs: a.clone(),
                };
            }
        }
        Outcome::vacuous()
    })
}

fn law_monoton(x: &[Ordinal]) -> Outcome {
    let (a, b) = (&x[0], &x[1]);
    let ap = sample_predecessors(a, 2);
    let bp = sample_predecessors(b, 2);
    let grid: Vec<Vec<Ordinal>> = ap
        .iter()
        .map(|p| {
            bp.iter()
                .map(|q| conway_f(a, b, p, q).expect("sampled below"))
                .collect()
        })
        .collect();
    for (i, row) in grid.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            if let Some(right) = row.get(j + 1) {
                if f > right {
                    return Outcome::le(f.clone(), right.clone());
                }
            }
            if let Some(down) = grid.get(i + 1).map(|r| &r[j]) {
                if f > down {
                    return Outcome::le(f.clone(), down.clone());
                }
            }
        }
    }
    Outcome::vacuous()
}

fn law_conway_witness(x: &[Ordinal]) -> Outcome {
    let (a, b) = (&x[0], &x[1]);
    let product = nat_mul(a, b);
    match conway_violation(a, b, &product, 4) {
        None => Outcome::vacuous(),
        Some((ap, bp)) => {
            let f = conway_f(a, b, &ap, &bp).expect("sampled below");
            Outcome {
                holds: false,
                lhs: product,
                rhs: f,
            }
        }
    }
}

fn law_naive_jac_distrib(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(jac_mul(a, &ord_add(b, c)), nat_add(&jac_mul(a, b), &jac_mul(a, c)))
}

fn law_naive_sj_add(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(sj_pow(a, &ord_add(b, c)), nat_mul(&sj_pow(a, b), &sj_pow(a, c)))
}

fn law_ord_add_comm(x: &[Ordinal]) -> Outcome {
    Outcome::eq(ord_add(&x[0], &x[1]), ord_add(&x[1], &x[0]))
}

fn law_ord_mul_comm(x: &[Ordinal]) -> Outcome {
    Outcome::eq(ord_mul(&x[0], &x[1]), ord_mul(&x[1], &x[0]))
}

fn law_ord_right_distrib(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(ord_mul(&ord_add(a, b), c), ord_add(&ord_mul(a, c), &ord_mul(b, c)))
}

fn law_jac_right_distrib(x: &[Ordinal]) -> Outcome {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    Outcome::eq(jac_mul(&nat_add(a, b), c), nat_add(&jac_mul(a, c), &jac_mul(b, c)))
}

fn one_one_omega() -> Vec<Ordinal> {
    vec![n(1), n(1), w()]
}

fn two_one_omega() -> Vec<Ordinal> {
    vec![n(2), n(1), w()]
}

fn one_omega() -> Vec<Ordinal> {
    vec![n(1), w()]
}

fn two_omega() -> Vec<Ordinal> {
    vec![n(2), w()]
}

macro_rules! law {
    ($id:literal, $stmt:literal, $pol:ident, $arity:expr, $grid:expr, $check:ident) => {
        law!($id, $stmt, $pol, $arity, $grid, $check, None)
    };
    ($id:literal, $stmt:literal, $pol:ident, $arity:expr, $grid:expr, $check:ident, $forced:expr) => {
        Law {
            id: $id,
            statement: $stmt,
            polarity: Polarity::$pol,
            arity: $arity,
            grid: $grid,
            forced: $forced,
            check: $check,
        }
    };
}

static CATALOG: &[Law] = &[
    law!("ord-add-assoc", "α+(β+γ) = (α+β)+γ", Holds, (3, 3), Some((0, 0)), law_ord_add_assoc),
    law!("ord-left-distrib", "α(β+γ) = αβ+αγ", Holds, (3, 3), Some((1, 0)), law_ord_left_distrib),
    law!("ord-mul-assoc", "α(βγ) = (αβ)γ", Holds, (3, 3), Some((2, 0)), law_ord_mul_assoc),
    law!("ord-pow-add", "α^(β+γ) = α^β·α^γ", Holds, (3, 3), Some((3, 0)), law_ord_pow_add),
    law!("ord-pow-mul", "α^(βγ) = (α^β)^γ", Holds, (3, 3), Some((4, 0)), law_ord_pow_mul),
    law!("nat-add-assoc", "α⊕(β⊕γ) = (α⊕β)⊕γ", Holds, (3, 3), Some((0, 1)), law_nat_add_assoc),
    law!("jacthm", "α×(β⊕γ) = (α×β)⊕(α×γ)", Holds, (3, 3), Some((1, 1)), law_jacthm),
    law!("jac-mul-assoc", "α×(β×γ) = (α×β)×γ", Holds, (3, 3), Some((2, 1)), law_jac_mul_assoc),
    law!("jac-pow-add", "α^×(β+γ) = α^×β × α^×γ", Holds, (3, 3), Some((3, 1)), law_jac_pow_add),
    law!("jac-pow-mul", "α^×(βγ) = (α^×β)^×γ", Holds, (3, 3), Some((4, 1)), law_jac_pow_mul),
    law!("nat-distrib", "α⊗(β⊕γ) = (α⊗β)⊕(α⊗γ)", Holds, (3, 3), Some((1, 2)), law_nat_distrib),
    law!("nat-mul-assoc", "α⊗(β⊗γ) = (α⊗β)⊗γ", Holds, (3, 3), Some((2, 2)), law_nat_mul_assoc),
    law!("mainthm", "α^⊗(β⊕γ) = α^⊗β ⊗ α^⊗γ", Holds, (3, 3), Some((3, 2)), law_mainthm),
    law!("maincor", "α^⊗(β×γ) = (α^⊗β)^⊗γ", Holds, (3, 3), Some((4, 2)), law_maincor),
    law!("maincor-finite", "α^⊗(β₀⊕…⊕βₖ) = α^⊗β₀ ⊗ … ⊗ α^⊗βₖ, k ≤ 6", Holds, (2, 8), None, law_maincor_finite),
    law!("nat-add-comm", "α⊕β = β⊕α", Holds, (2, 2), None, law_nat_add_comm),
    law!("nat-mul-comm", "α⊗β = β⊗α", Holds, (2, 2), None, law_nat_mul_comm),
    law!("nat-right-distrib", "(β⊕γ)⊗α = (β⊗α)⊕(γ⊗α)", Holds, (3, 3), None, law_nat_right_distrib),
    law!("nat-add-strict", "β<γ ⇔ α⊕β < α⊕γ", Holds, (3, 3), None, law_nat_add_strict),
    law!("nat-mul-strict", "α>0: β<γ ⇔ α⊗β < α⊗γ", Holds, (3, 3), None, law_nat_mul_strict),
    law!("deg-nat-mul", "deg(α⊗β) = deg α ⊕ deg β", Holds, (2, 2), None, law_deg_nat_mul),
    law!("omega-jac-mul", "ωδ = ω×δ", Holds, (1, 1), None, law_omega_jac),
    law!("chain-add", "α+β ≤ α⊕β", Holds, (2, 2), None, law_chain_add),
    law!("chain-mul", "αβ ≤ α×β ≤ α⊗β", Holds, (2, 2), None, law_chain_mul),
    law!("chain-pow", "α^β ≤ α^×β ≤ α^⊗β", Holds, (2, 2), None, law_chain_pow),
    law!("monus-least", "α⊖β is the least γ with β⊕γ ≥ α", Holds, (2, 2), None, law_monus_least),
    law!("monoton", "f_{α,β}(α',β') is increasing in α' and β'", Holds, (2, 2), None, law_monoton),
    law!("conway-witness", "α⊗β exceeds every sampled f_{α,β}(α',β')", Holds, (2, 2), None, law_conway_witness),
    law!("naive-jac-distrib", "α×(β+γ) = (α×β)⊕(α×γ)", Fails, (3, 3), None, law_naive_jac_distrib, Some(one_one_omega)),
    law!("naive-sj-add", "α^⊗(β+γ) = α^⊗β ⊗ α^⊗γ", Fails, (3, 3), None, law_naive_sj_add, Some(two_one_omega)),
    law!("ord-add-comm", "α+β = β+α", Fails, (2, 2), None, law_ord_add_comm, Some(one_omega)),
    law!("ord-mul-comm", "αβ = βα", Fails, (2, 2), None, law_ord_mul_comm, Some(two_omega)),
    law!("ord-right-distrib", "(α+β)γ = αγ+βγ", Fails, (3, 3), None, law_ord_right_distrib, Some(one_one_omega)),
    law!("jac-right-distrib", "(α⊕β)×γ = (α×γ)⊕(β×γ)", Fails, (3, 3), None, law_jac_right_distrib, Some(one_one_omega)),
];

/// All laws, positive first.
pub fn catalog() -> &'static [Law] {
    CATALOG
}

pub fn find_law(id: &str) -> Result<&'static Law, HarnessError> {
    CATALOG
        .iter()
        .find(|l| l.id == id)
        .ok_or_else(|| HarnessError::UnknownLaw(id.to_string()))
}

fn ser_ordinal<S: Serializer>(a: &Ordinal, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&print_text(a))
}

fn ser_ordinals<S: Serializer>(xs: &[Ordinal], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(print_text))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: u64,
    #[serde(serialize_with = "ser_ordinals")]
    pub inputs: Vec<Ordinal>,
    #[serde(serialize_with = "ser_ordinal")]
    pub lhs: Ordinal,
    #[serde(serialize_with = "ser_ordinal")]
    pub rhs: Ordinal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law_id: String,
    pub statement: String,
    pub expected_polarity: Polarity,
    pub seed: u64,
    pub trials: u64,
    pub params: GenParams,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl LawReport {
    /// A positive law passes with no failures, a negative one with at least one.
    pub fn passes(&self) -> bool {
        match self.expected_polarity {
            Polarity::Holds => self.failures.is_empty(),
            Polarity::Fails => !self.failures.is_empty(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Serial,
    Parallel,
}

/// Input tuple of one trial.
pub fn trial_inputs(law: &Law, params: &GenParams, trial: u64) -> Vec<Ordinal> {
    if trial == 0 {
        if let Some(forced) = law.forced_inputs() {
            return forced;
        }
    }
    let seed = trial_seed(params.seed, law.id, trial);
    let (lo, hi) = law.arity;
    let count = lo + (seed % (hi - lo + 1) as u64) as usize;
    let p = params.with_seed(seed);
    (0..count as u64).map(|i| gen_ordinal(&p, i)).collect()
}

fn run_trial(law: &Law, params: &GenParams, trial: u64) -> Option<Failure> {
    let inputs = trial_inputs(law, params, trial);
    let out = law.check(&inputs);
    (!out.holds).then_some(Failure {
        trial,
        inputs,
        lhs: out.lhs,
        rhs: out.rhs,
    })
}

pub fn check_law(law_id: &str, params: &GenParams, trials: u64) -> Result<LawReport, HarnessError> {
    check_law_with(law_id, params, trials, Execution::Parallel)
}

pub fn check_law_with(
    law_id: &str,
    params: &GenParams,
    trials: u64,
    exec: Execution,
) -> Result<LawReport, HarnessError> {
    let law = find_law(law_id)?;
    params.validate()?;
    let failures: Vec<Failure> = match exec {
        Execution::Serial => (0..trials).filter_map(|t| run_trial(law, params, t)).collect(),
        Execution::Parallel => (0..trials)
            .into_par_iter()
            .filter_map(|t| run_trial(law, params, t))
            .collect(),
    };
    let mut report = LawReport {
        law_id: law.id.to_string(),
        statement: law.statement.to_string(),
        expected_polarity: law.polarity,
        seed: params.seed,
        trials,
        params: *params,
        passed: false,
        failures,
    };
    report.passed = report.passes();
    Ok(report)
}
