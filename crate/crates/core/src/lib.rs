//! Exact arithmetic on ordinals below ε₀ in Cantor normal form.
//!
//! Four families of operations are provided: the ordinary ones
//! ([`ord_add`], [`ord_mul`], [`ord_pow`]), the natural sum and product
//! ([`nat_add`], [`nat_mul`]), Jacobsthal multiplication and exponentiation
//! ([`jac_mul`], [`jac_pow`]), and the exponentiation obtained by iterating
//! the natural product ([`sj_pow`]). The [`harness`] module checks algebraic
//! laws between them on seeded inputs, and [`expr`] parses a small
//! expression language.
//!
//! ```
//! use ordinal_arith::expr::{evaluate, print_text};
//!
//! let v = evaluate("(w+2) #^ 2").unwrap();
//! assert_eq!(print_text(&v), "w^2 + w*4 + 4");
//! ```

pub mod classic;
pub mod cli;
pub mod cnf;
pub mod error;
pub mod expr;
pub mod harness;
pub mod jacobsthal;
pub mod natural;
pub mod superjac;

pub use classic::{ord_add, ord_mul, ord_pow};
pub use cnf::{lub_strict, make_ordinal, Decomposition, Ordinal, Term};
pub use error::OrdinalError;
pub use jacobsthal::{jac_mul, jac_pow};
pub use natural::{conway_f, conway_witness_check, nat_add, nat_mul, nat_ominus};
pub use superjac::{sj_pow, sj_pow_finite_base};
