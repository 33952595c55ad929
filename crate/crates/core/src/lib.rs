pub mod arith;
pub mod chartable;
pub mod clifford;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod heads;
pub mod permgroup;
pub mod scalar;
pub mod structure;

pub use cyclotomic::{canonical_cyclotomic_conductor, Cyclotomic, FieldDescriptor};
pub use error::{Error, Result};
pub use permgroup::{Group, Permutation, Subgroup};
pub use scalar::Scalar;

/// Arbitrary-precision rationals, the default coefficient type.
pub type Rational = num_rational::BigRational;

/// Cyclotomic numbers over arbitrary-precision rationals.
pub type CycNumber = Cyclotomic<Rational>;

/// Cyclotomic numbers over 64-bit rationals; panics on coefficient overflow.
pub type SmallCycNumber = Cyclotomic<num_rational::Rational64>;
