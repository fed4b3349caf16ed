//! Exact arithmetic: rationals, polynomials, rational functions, Laurent polynomials,
//! truncated series and a fraction-free linear solver.

mod laurent;
mod linsolve;
mod poly;
mod ratfun;
mod rational;
mod series;

pub use laurent::{Exponents, FractionSum, LinearFactor, SparseLaurent};
pub use linsolve::{independent_rows, solve_exact};
pub use poly::Poly;
pub use ratfun::{Mobius, RationalFunction, Var};
pub use rational::Rational;
pub use series::{SeriesCoefficient, TruncatedSeries};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("degenerate Mobius map (ad - bc = 0)")]
    DegenerateMap,
    #[error("nonzero residue {residue} at {point}: antiderivative needs a logarithm")]
    NonzeroResidue { point: String, residue: String },
    #[error("denominator factor {0} is outside the declared linear factors")]
    UnfactoredDenominator(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("coefficient {index} is beyond the truncation order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
}
