use serde::{Deserialize, Serialize};

use crate::arith::primes_up_to;
use crate::permgroup::Group;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassData {
    /// Smallest member, as an element index.
    pub representative: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub inverse_class: usize,
    /// `(q, class of x^q)` for each prime `q` up to the group exponent.
    pub power_map: Vec<(u64, usize)>,
    pub element_order: usize,
}

/// Conjugacy classes in canonical order (element order, then size, then
/// smallest member), together with the class index of every element.
pub fn conjugacy_classes_with_lookup(g: &Group) -> (Vec<ClassData>, Vec<usize>) {
    let n = g.order();
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if orbit_of[x] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[x] = id;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            for &s in g.generator_indices() {
                let y = g.conj(orbit[i], s);
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    // orbits are discovered in order of their smallest member
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&i| (g.element_order(orbits[i][0]), orbits[i].len(), orbits[i][0]));
    let mut class_of = vec![0; n];
    for (c, &i) in order.iter().enumerate() {
        for &x in &orbits[i] {
            class_of[x] = c;
        }
    }
    let primes = primes_up_to(g.exponent() as u64);
    let classes = order
        .iter()
        .map(|&i| {
            let members = std::mem::take(&mut orbits[i]);
            let rep = members[0];
            ClassData {
                representative: rep,
                size: members.len(),
                inverse_class: class_of[g.inv(rep)],
                power_map: primes
                    .iter()
                    .map(|&q| (q, class_of[g.pow(rep, q as i64)]))
                    .collect(),
                element_order: g.element_order(rep),
                members,
            }
        })
        .collect();
    (classes, class_of)
}

pub fn conjugacy_classes(g: &Group) -> Vec<ClassData> {
    conjugacy_classes_with_lookup(g).0
}
