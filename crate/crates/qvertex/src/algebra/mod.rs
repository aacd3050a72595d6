//! Exact sparse polynomials and rational functions over an exact field.

mod coefficient;
mod monomial;
mod polynomial;
mod qseries;
mod rational;
mod var;

pub use coefficient::Coefficient;
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use qseries::{q_binomial, q_factorial, q_pochhammer, q_power};
pub use rational::{cyclotomic, RationalFunction};
pub use var::{Var, VarKind, MAX_INDEX};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("denominator vanishes")]
    ZeroDenominator,
    #[error("denominator has no constant term in the expansion variables")]
    NotSeriesExpandable,
    #[error("parse error: {0}")]
    Parse(String),
}
