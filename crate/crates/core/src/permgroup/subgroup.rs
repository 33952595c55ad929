use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::{Group, Permutation};
use crate::error::{Error, Result};

/// A subgroup of an enumerated group, stored as the sorted list of parent
/// element indices together with a small generating set.
///
/// Equality, ordering and hashing look at the element list only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical subgroup order: by size, then by element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// Position of a parent element inside this subgroup's element list, i.e.
    /// its index in [`Group::subgroup_as_group`].
    pub fn local_index(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// Re-expresses a subgroup of `subgroup_as_group(self)` in parent indices.
    pub fn lift(&self, local: &Subgroup) -> Subgroup {
        Subgroup {
            elements: local.elements.iter().map(|&i| self.elements[i]).collect(),
            generators: local.generators.iter().map(|&i| self.elements[i]).collect(),
        }
    }

    /// Re-expresses a subgroup of the parent contained in `self` in local
    /// indices. Returns `None` if `inner` is not contained in `self`.
    pub fn localize(&self, inner: &Subgroup) -> Option<Subgroup> {
        let elements = inner
            .elements
            .iter()
            .map(|&x| self.local_index(x))
            .collect::<Option<Vec<_>>>()?;
        let generators = inner
            .generators
            .iter()
            .map(|&x| self.local_index(x))
            .collect::<Option<Vec<_>>>()?;
        Some(Subgroup {
            elements,
            generators,
        })
    }
}

/// The image of `G → G/N` realized as the action of `G` on right cosets of `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    /// `image[g]` is the quotient element index of the coset `N g`.
    pub image: Vec<usize>,
}

impl Group {
    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order()).collect(),
            generators: self.generator_indices().to_vec(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    /// Smallest subgroup containing the given elements.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut generators: Vec<usize> = Vec::new();
        for &g in gens {
            if g != 0 && !generators.contains(&g) {
                generators.push(g);
            }
        }
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0usize];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in &generators {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        Subgroup {
            elements: list,
            generators,
        }
    }

    /// Wraps a set of elements already known to form a subgroup and picks a
    /// small generating set for it.
    pub fn subgroup_from_elements(&self, mut elements: Vec<usize>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        let mut candidates = elements.clone();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut generators = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in candidates {
            if current.order() == elements.len() {
                break;
            }
            if !current.contains(x) {
                generators.push(x);
                current = self.closure(&generators);
            }
        }
        debug_assert_eq!(current.elements, elements, "element set is not closed");
        current
    }

    pub fn subgroup_generated(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|p| self.index_of(p).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&idx))
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = a.generators.iter().chain(&b.generators).copied().collect();
        self.closure(&gens)
    }

    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&g| s.generators.iter().all(|&x| s.contains(self.conj(x, g))))
            .collect();
        self.subgroup_from_elements(elems)
    }

    pub fn centralizer(&self, x: usize) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect();
        self.subgroup_from_elements(elems)
    }

    /// Elements commuting with every element of `s`.
    pub fn centralizer_of_subgroup(&self, s: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&g| {
                s.generators
                    .iter()
                    .all(|&x| self.mul(g, x) == self.mul(x, g))
            })
            .collect();
        self.subgroup_from_elements(elems)
    }

    /// `s^g = g⁻¹ s g`.
    pub fn conjugate_subgroup(&self, s: &Subgroup, g: usize) -> Subgroup {
        let mut elements: Vec<usize> = s.elements.iter().map(|&x| self.conj(x, g)).collect();
        elements.sort_unstable();
        Subgroup {
            elements,
            generators: s.generators.iter().map(|&x| self.conj(x, g)).collect(),
        }
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.generator_indices()
            .iter()
            .all(|&g| s.generators.iter().all(|&x| s.contains(self.conj(x, g))))
    }

    /// Smallest normal subgroup containing `s`.
    pub fn normal_closure(&self, s: &Subgroup) -> Subgroup {
        let mut gens = s.generators.clone();
        let mut current = self.closure(&gens);
        loop {
            let mut grew = false;
            for i in 0..gens.len() {
                for &g in self.generator_indices() {
                    let y = self.conj(gens[i], g);
                    if !current.contains(y) {
                        gens.push(y);
                        current = self.closure(&gens);
                        grew = true;
                    }
                }
            }
            if !grew {
                return current;
            }
        }
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = a.elements.iter().copied().filter(|&x| b.contains(x)).collect();
        self.subgroup_from_elements(elems)
    }

    /// The set `A·B`, provided it is a subgroup.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
        let mut ab: Vec<usize> = Vec::with_capacity(a.order() * b.order());
        for &x in &a.elements {
            for &y in &b.elements {
                ab.push(self.mul(x, y));
            }
        }
        ab.sort_unstable();
        ab.dedup();
        let closed = ab.iter().all(|&x| {
            b.generators
                .iter()
                .chain(&a.generators)
                .all(|&g| ab.binary_search(&self.mul(x, g)).is_ok())
        });
        if !closed {
            return Err(Error::NotASubgroup);
        }
        let mut generators = a.generators.clone();
        generators.extend(b.generators.iter().copied().filter(|g| !a.generators.contains(g)));
        Ok(Subgroup {
            elements: ab,
            generators,
        })
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        // Cosets are numbered in order of their smallest element.
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if coset_of[g] == usize::MAX {
                let id = reps.len();
                reps.push(g);
                for &x in &n.elements {
                    coset_of[self.mul(x, g)] = id;
                }
            }
        }
        let action = |g: usize| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| coset_of[self.mul(r, g)] as u32)
                .collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        };
        let gens: Vec<Permutation> = self.generator_indices().iter().map(|&g| action(g)).collect();
        let group = Group::from_generators(reps.len(), gens)?;
        let image = (0..self.order())
            .map(|g| {
                group
                    .index_of(&action(g))
                    .expect("coset action lands in the quotient")
            })
            .collect();
        Ok(Quotient { group, image })
    }

    /// Full preimage of a subgroup of a quotient.
    pub fn preimage(&self, q: &Quotient, s: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = (0..self.order()).filter(|&g| s.contains(q.image[g])).collect();
        self.subgroup_from_elements(elems)
    }

    /// All conjugates of `s` under the group, sorted and deduplicated.
    pub fn conjugates(&self, s: &Subgroup) -> Vec<Subgroup> {
        let mut out = vec![s.clone()];
        let mut head = 0;
        while head < out.len() {
            for &g in self.generator_indices() {
                let c = self.conjugate_subgroup(&out[head], g);
                if !out.contains(&c) {
                    out.push(c);
                }
            }
            head += 1;
        }
        out.sort();
        out
    }

    pub fn are_conjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.order() == b.order() && self.conjugates(a).contains(b)
    }
}
