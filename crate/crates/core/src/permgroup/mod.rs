//! Permutation groups with enumerated elements, subgroups as sorted index
//! lists, and the usual subgroup constructions.

mod bsgs;
mod group;
mod permutation;
mod subgroup;

pub use bsgs::Bsgs;
pub use group::{Group, ELEMENT_CAP};
pub use permutation::Permutation;
pub use subgroup::{Quotient, Subgroup};
