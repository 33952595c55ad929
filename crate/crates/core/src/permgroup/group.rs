use std::collections::HashMap;
use std::fmt;

use super::{Bsgs, Permutation, Subgroup};
use crate::error::{Error, Result};

/// Groups above this order are rejected; every algorithm downstream works on
/// the full element list.
pub const ELEMENT_CAP: usize = 5000;

/// A finite permutation group with its elements enumerated in lexicographic
/// order of their image arrays. Element 0 is always the identity.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Vec<u16>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    bsgs: Bsgs,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl Group {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {} but the group degree is {degree}",
                    g.degree()
                )));
            }
        }
        let bsgs = Bsgs::new(degree, &generators);
        let order = bsgs.order();
        if order > ELEMENT_CAP as u128 {
            return Err(Error::GroupTooLarge {
                order,
                cap: ELEMENT_CAP,
            });
        }
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();

        // Breadth-first enumeration; every element other than the identity
        // records the element it was reached from and the generator used.
        let identity = Permutation::identity(degree);
        let mut bfs = vec![identity.clone()];
        let mut seen: HashMap<Permutation, usize> = HashMap::new();
        seen.insert(identity, 0);
        let mut tree: Vec<(usize, usize)> = vec![(0, 0)];
        let mut head = 0;
        while head < bfs.len() {
            for (s, g) in gens.iter().enumerate() {
                let y = bfs[head].then(g);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), bfs.len());
                    bfs.push(y);
                    tree.push((head, s));
                }
            }
            head += 1;
        }
        debug_assert_eq!(bfs.len() as u128, order);

        let mut elements = bfs.clone();
        elements.sort();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let n = elements.len();
        let right_mul: Vec<Vec<usize>> = elements
            .iter()
            .map(|x| gens.iter().map(|g| index[&x.then(g)]).collect())
            .collect();
        let bfs_sorted: Vec<usize> = bfs.iter().map(|p| index[p]).collect();

        let mut table = vec![0u16; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u16;
            for k in 1..n {
                let (parent, s) = tree[k];
                let b = bfs_sorted[k];
                let ap = row[bfs_sorted[parent]] as usize;
                row[b] = right_mul[ap][s] as u16;
            }
        }
        let generator_indices = gens.iter().map(|g| index[g]).collect();
        Ok(Self::finish(degree, generators, generator_indices, elements, index, table, bsgs))
    }

    fn finish(
        degree: usize,
        generators: Vec<Permutation>,
        generator_indices: Vec<usize>,
        elements: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
        table: Vec<u16>,
        bsgs: Bsgs,
    ) -> Self {
        let n = elements.len();
        let inverses: Vec<usize> = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut orders = vec![1; n];
        for (a, ord) in orders.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = table[x * n + a] as usize;
                *ord += 1;
            }
        }
        Group {
            degree,
            generators,
            generator_indices,
            elements,
            index,
            table,
            inverses,
            orders,
            bsgs,
        }
    }

    /// The subgroup `s` as a group in its own right. Since element orders are
    /// lexicographic in both, local index `i` corresponds to `s.elements()[i]`.
    pub fn subgroup_as_group(&self, s: &Subgroup) -> Group {
        let n = s.order();
        let parent_n = self.order();
        let mut local = vec![usize::MAX; parent_n];
        for (i, &x) in s.elements().iter().enumerate() {
            local[x] = i;
        }
        let mut table = vec![0u16; n * n];
        for (i, &a) in s.elements().iter().enumerate() {
            for (j, &b) in s.elements().iter().enumerate() {
                table[i * n + j] = local[self.mul(a, b)] as u16;
            }
        }
        let elements: Vec<Permutation> = s.elements().iter().map(|&x| self.elements[x].clone()).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let generators: Vec<Permutation> = s.generators().iter().map(|&x| self.elements[x].clone()).collect();
        let generator_indices = s.generators().iter().map(|&x| local[x]).collect();
        let bsgs = Bsgs::new(self.degree, &generators);
        Self::finish(self.degree, generators, generator_indices, elements, index, table, bsgs)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn bsgs_order(&self) -> u128 {
        self.bsgs.order()
    }

    pub fn bsgs(&self) -> &Bsgs {
        &self.bsgs
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Indices of the non-identity generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Right conjugation `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.orders[a] as i64;
        let k = k.rem_euclid(ord);
        let mut r = 0;
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_indices;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn contains_permutation(&self, p: &Permutation) -> bool {
        self.bsgs.contains(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    pub(crate) fn s4() -> Group {
        Group::from_generators(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]).unwrap()
    }

    #[test]
    fn small_symmetric_groups() {
        let s3 = Group::from_generators(3, vec![cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 1]])]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s4().order(), 24);
        assert_eq!(s4().exponent(), 12);
    }

    #[test]
    fn trivial_group_of_degree_one() {
        let g = Group::from_generators(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn too_large_is_rejected() {
        let long: Vec<u32> = (0..8).collect();
        let err = Group::from_generators(8, vec![cyc(8, &[&long]), cyc(8, &[&[0, 1]])]).unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { order: 40320, .. }));
    }

    #[test]
    fn mismatched_degree_is_rejected() {
        assert!(Group::from_generators(4, vec![cyc(3, &[&[0, 1]])]).is_err());
    }

    #[test]
    fn cayley_table_agrees_with_composition() {
        let g = s4();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let p = g.element(a).then(g.element(b));
                assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
        assert!(g.element(0).is_identity());
    }
}
