use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::Cyclotomic;
use crate::arith::{euler_phi, units};
use crate::scalar::Scalar;

/// The field generated by a set of cyclotomic values, recorded as the
/// conductor `c` together with the subgroup of `(Z/c)^×` fixing every value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub conductor: u32,
    pub stabilizer: Vec<u32>,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor {
            conductor: 1,
            stabilizer: vec![1],
        }
    }

    pub fn of<'a, T: Scalar + 'a>(values: impl IntoIterator<Item = &'a Cyclotomic<T>>) -> Self {
        let values: Vec<&Cyclotomic<T>> = values.into_iter().collect();
        let conductor = values.iter().fold(1u32, |acc, v| acc.lcm(&v.level()));
        let stabilizer = units(conductor as u64)
            .into_iter()
            .filter(|&k| {
                values
                    .iter()
                    .all(|v| v.galois(k as i64).expect("unit modulo the conductor") == **v)
            })
            .map(|k| k as u32)
            .collect();
        FieldDescriptor {
            conductor,
            stabilizer,
        }
    }

    /// True when the field is the whole of `Q_c`.
    pub fn is_cyclotomic(&self) -> bool {
        self.stabilizer == [1]
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// Degree of the field over the rationals.
    pub fn degree(&self) -> u64 {
        euler_phi(self.conductor as u64) / self.stabilizer.len() as u64
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_cyclotomic() {
            write!(f, "Q_{}", self.conductor)
        } else {
            write!(f, "Q_{}^{:?}", self.conductor, self.stabilizer)
        }
    }
}

/// `Q_n = Q_{n/2}` when `n ≡ 2 (mod 4)`; returns the representative level.
pub fn canonical_cyclotomic_conductor(n: u32) -> u32 {
    assert!(n >= 1);
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}
