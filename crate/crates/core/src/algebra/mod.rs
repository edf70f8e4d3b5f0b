//! Exact coefficient arithmetic: rationals, sparse parameter polynomials,
//! their fractions, rational functions in `x`, and truncated power series.

mod frac;
pub mod gcd;
mod mpoly;
mod parse;
mod rat;
mod ratfun;
mod series;

pub use frac::Frac;
pub use mpoly::{mpoly_arith, MPoly, Monomial, RingOp, MAX_EXPONENT, MAX_VARS};
pub use parse::{parse_frac, parse_mpoly, parse_ratfun};
pub use rat::Rat;
pub use ratfun::{ratfun_arith, FieldOp, RatFun};
pub use series::{series_equal_upto, Series};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("not expandable at x=0")]
    NotExpandable,
    #[error("evaluation point is a pole")]
    PoleAtPoint,
    #[error("series order {have} is below the required {needed}")]
    InsufficientOrder { needed: usize, have: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
