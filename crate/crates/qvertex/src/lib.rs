//! Symbolic partition functions of integrable vertex models.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! values live in the field of rational functions in `q`, the spectral
//! variables `x_i, y_j` and the column parameters `u_i, v_i`.

pub mod algebra;
pub mod partitions;
pub mod lattice;
pub mod families;
pub mod identities;
pub mod expansions;
pub mod weights;
pub mod json;

pub use algebra::{AlgebraError, Monomial, Var, VarKind};

/// Coefficient field used throughout the crate.
pub type Rational = num_rational::BigRational;
/// Polynomials with [`Rational`] coefficients.
pub type Poly = algebra::Polynomial<Rational>;
/// Rational functions with [`Rational`] coefficients; the value type of every
/// weight, partition function and expansion coefficient.
pub type RingElem = algebra::RationalFunction<Rational>;
