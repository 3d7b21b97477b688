//! Law-verification harness: seeded generation, recursion oracles and the
//! executable law catalog.

mod gen;
mod laws;
mod oracle;

use thiserror::Error;

pub use gen::{gen_limit_ordinal, gen_ordinal, mix64, trial_seed, GenParams};
pub use laws::{
    catalog, check_law, check_law_with, find_law, Execution, Failure, Law, LawReport, Outcome,
    Polarity, trial_inputs, GRID_COLUMNS, GRID_ROWS,
};
pub use oracle::{
    certify_recursion, iterate_op, limit_certificate, CertDepths, CertResult, IterOp,
    TransfiniteOp, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}
