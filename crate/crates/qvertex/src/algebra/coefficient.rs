use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Exact field of coefficients for [`Polynomial`](super::Polynomial) and
/// [`RationalFunction`](super::RationalFunction).
///
/// Canonical forms rely on exact division, so only exact fields qualify;
/// the crate instantiates it with `BigRational` (see [`crate::Rational`]) and
/// tests also use `Rational64`.
pub trait Coefficient:
    Clone + Ord + Debug + Display + Zero + One + Send + Sync + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Exact quotient; `rhs` must be nonzero.
    fn div_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn is_negative(&self) -> bool;
    fn is_integer(&self) -> bool;

    fn from_int(n: i64) -> Self;
}

impl<T> Coefficient for Ratio<T>
where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static,
{
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = &*self + rhs;
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer type holds i64"))
    }
}
