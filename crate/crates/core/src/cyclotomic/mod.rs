//! Exact arithmetic in cyclotomic fields, Galois action and fields of values.

mod field;
mod number;

pub use field::{canonical_cyclotomic_conductor, FieldDescriptor};
pub use number::Cyclotomic;
