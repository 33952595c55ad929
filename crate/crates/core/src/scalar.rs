//! The exact scalar types cyclotomic coefficients may be drawn from.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};

/// An exact ordered field element usable as a cyclotomic coefficient.
///
/// Implemented for every type with the required `num-traits` surface; in
/// practice [`num_rational::BigRational`] and [`num_rational::Rational64`].
pub trait Scalar:
    Clone + Num + Signed + Ord + Hash + Debug + Display + FromPrimitive + FromStr + Send + Sync
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone + Num + Signed + Ord + Hash + Debug + Display + FromPrimitive + FromStr + Send + Sync
{
}
