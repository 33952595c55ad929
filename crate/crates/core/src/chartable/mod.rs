//! Conjugacy classes and irreducible character tables.

mod abelian;
mod classes;
mod dixon;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use abelian::dual_group_exponents;
pub use classes::{conjugacy_classes, conjugacy_classes_with_lookup, ClassData};
pub use dixon::dixon_prime;

use crate::error::{Error, Result};
use crate::permgroup::Group;
use crate::structure::derived_subgroup;
use crate::{CycNumber, FieldDescriptor, Rational};

/// A class function, as values on the classes of some table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClassFunction {
    pub values: Vec<CycNumber>,
}

impl ClassFunction {
    pub fn new(values: Vec<CycNumber>) -> Self {
        ClassFunction { values }
    }

    pub fn constant(len: usize, c: i64) -> Self {
        ClassFunction::new(vec![CycNumber::from_int(c); len])
    }

    /// Value at the identity class, as an integer. Panics if it is not one.
    pub fn degree(&self) -> i64 {
        let d = self.values[0].to_scalar().expect("degree is rational");
        assert!(d.is_integer(), "degree is an integer");
        i64::try_from(d.to_integer()).expect("degree fits in i64")
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(CycNumber::is_rational)
    }

    pub fn field(&self) -> FieldDescriptor {
        FieldDescriptor::of(&self.values)
    }

    pub fn galois(&self, k: i64) -> Result<Self> {
        Ok(ClassFunction::new(
            self.values.iter().map(|v| v.galois(k)).collect::<Result<_>>()?,
        ))
    }

    pub fn conj(&self) -> Self {
        ClassFunction::new(self.values.iter().map(CycNumber::conj).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        ClassFunction::new(self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        ClassFunction::new(self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        ClassFunction::new(self.values.iter().map(|v| v.scale(q)).collect())
    }

    /// Values in canonical text form.
    pub fn render(&self) -> Vec<String> {
        self.values.iter().map(ToString::to_string).collect()
    }
}

/// Conjugacy classes and irreducible characters of one group.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub order: usize,
    pub exponent: usize,
    pub classes: Vec<ClassData>,
    /// Class index of every element of the group.
    pub class_of: Vec<usize>,
    pub irreducibles: Vec<ClassFunction>,
}

impl CharTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles.iter().map(ClassFunction::degree).collect()
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction::constant(self.classes.len(), 1)
    }

    pub fn position(&self, chi: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|x| x == chi)
    }

    pub fn linear_characters(&self) -> Vec<ClassFunction> {
        self.irreducibles.iter().filter(|x| x.degree() == 1).cloned().collect()
    }

    /// The character of the regular representation.
    pub fn regular_character(&self) -> ClassFunction {
        let mut values = vec![CycNumber::zero(); self.classes.len()];
        values[0] = CycNumber::from_int(self.order as i64);
        ClassFunction::new(values)
    }

    /// Checks both orthogonality relations exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let k = self.classes.len();
        let conj: Vec<ClassFunction> = self.irreducibles.iter().map(ClassFunction::conj).collect();
        if self.irreducibles.len() != k {
            return Err(Error::Dixon(format!(
                "{} irreducibles for {k} classes",
                self.irreducibles.len()
            )));
        }
        let sizes: Vec<CycNumber> = self
            .classes
            .iter()
            .map(|c| CycNumber::from_int(c.size as i64))
            .collect();
        for i in 0..k {
            for j in i..k {
                let s: CycNumber = (0..k)
                    .map(|c| &sizes[c] * &(&self.irreducibles[i].values[c] * &conj[j].values[c]))
                    .sum();
                let expected = if i == j { self.order as i64 } else { 0 };
                if s != CycNumber::from_int(expected) {
                    return Err(Error::Dixon(format!("rows {i} and {j} are not orthogonal")));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let s: CycNumber = (0..k)
                    .map(|i| &self.irreducibles[i].values[a] * &conj[i].values[b])
                    .sum();
                let expected = if a == b {
                    (self.order / self.classes[a].size) as i64
                } else {
                    0
                };
                if s != CycNumber::from_int(expected) {
                    return Err(Error::Dixon(format!("columns {a} and {b} are not orthogonal")));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, g: &Group) -> TableJson {
        TableJson {
            order: self.order,
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    representative: g.element(c.representative).to_string(),
                    size: c.size,
                    element_order: c.element_order,
                })
                .collect(),
            irreducibles: self.irreducibles.iter().map(ClassFunction::render).collect(),
        }
    }

    /// Plain-text rendering: one line per class, then one line per
    /// irreducible with values separated by `" ; "`.
    pub fn render_text(&self, g: &Group) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "order {}, {} classes\n",
            self.order,
            self.classes.len()
        ));
        for (i, c) in self.classes.iter().enumerate() {
            out.push_str(&format!(
                "class {i}: rep {} size {} order {}\n",
                g.element(c.representative),
                c.size,
                c.element_order
            ));
        }
        for (i, chi) in self.irreducibles.iter().enumerate() {
            out.push_str(&format!("chi {i}: {}\n", chi.render().join(" ; ")));
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassJson {
    pub representative: String,
    pub size: usize,
    pub element_order: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableJson {
    pub order: usize,
    pub classes: Vec<ClassJson>,
    pub irreducibles: Vec<Vec<String>>,
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.render().join(", "))
    }
}

/// Canonical order: by degree, then by the rendered value vector.
fn sort_canonically(chars: &mut [ClassFunction]) {
    chars.sort_by_cached_key(|c| (c.degree(), c.render()));
}

/// The full character table, by the class-matrix method over a prime field.
pub fn character_table(g: &Group) -> Result<CharTable> {
    let (classes, class_of) = conjugacy_classes_with_lookup(g);
    let mut irreducibles: Vec<ClassFunction> = dixon::dixon_characters(g, &classes, &class_of)?
        .into_iter()
        .map(ClassFunction::new)
        .collect();
    sort_canonically(&mut irreducibles);
    let table = CharTable {
        order: g.order(),
        exponent: g.exponent(),
        classes,
        class_of,
        irreducibles,
    };
    table.check_orthogonality()?;
    Ok(table)
}

/// `(1/|G|) Σ |c| a(c) conj(b(c))`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction, table: &CharTable) -> CycNumber {
    let s: CycNumber = table
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| (&a.values[i] * &b.values[i].conj()).scale(&Rational::from_integer(c.size.into())))
        .sum();
    s.scale(&Rational::new(1.into(), table.order.into()))
}

fn exponent_character(exps: &[u32], e: usize, reps: impl Iterator<Item = usize>) -> ClassFunction {
    ClassFunction::new(
        reps.map(|x| CycNumber::root_of_unity(e as u32, exps[x] as i64))
            .collect(),
    )
}

/// Table of an abelian group taken straight from its dual group, in canonical
/// order. An oracle for [`character_table`].
pub fn dual_group_table(g: &Group) -> CharTable {
    let (classes, class_of) = conjugacy_classes_with_lookup(g);
    let e = g.exponent();
    let mut irreducibles: Vec<ClassFunction> = dual_group_exponents(g)
        .iter()
        .map(|exps| exponent_character(exps, e, classes.iter().map(|c| c.representative)))
        .collect();
    sort_canonically(&mut irreducibles);
    CharTable {
        order: g.order(),
        exponent: e,
        classes,
        class_of,
        irreducibles,
    }
}

/// Linear characters of `g`, on its canonical classes, through the dual
/// group of `G/G'`.
pub fn linear_characters(g: &Group) -> Vec<ClassFunction> {
    let classes = conjugacy_classes(g);
    let q = g
        .quotient(&derived_subgroup(g))
        .expect("the derived subgroup is normal");
    let e = q.group.exponent();
    let mut out: Vec<ClassFunction> = dual_group_exponents(&q.group)
        .iter()
        .map(|exps| exponent_character(exps, e, classes.iter().map(|c| q.image[c.representative])))
        .collect();
    sort_canonically(&mut out);
    out
}

/// Multiplicative order of a root of unity, if `x` is one.
pub fn root_of_unity_order(x: &CycNumber) -> Option<u64> {
    let bound = 2 * x.level() as u64;
    let one = CycNumber::one();
    let mut power = x.clone();
    for n in 1..=bound {
        if power == one {
            return Some(n);
        }
        power = &power * x;
    }
    None
}

/// Order of a linear character in the dual group: the lcm of the orders of
/// its values.
pub fn character_order(lambda: &ClassFunction) -> u64 {
    lambda.values.iter().fold(1, |acc, v| {
        acc.lcm(&root_of_unity_order(v).expect("linear characters take root-of-unity values"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    fn group(n: usize, gens: &[&[&[u32]]]) -> Group {
        Group::from_generators(
            n,
            gens.iter().map(|c| Permutation::from_cycles(n, c).unwrap()).collect(),
        )
        .unwrap()
    }

    fn s3() -> Group {
        group(3, &[&[&[0, 1, 2]], &[&[0, 1]]])
    }

    fn s4() -> Group {
        group(4, &[&[&[0, 1, 2, 3]], &[&[0, 1]]])
    }

    #[test]
    fn class_sizes() {
        let sizes: Vec<usize> = conjugacy_classes(&s3()).iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let sizes: Vec<usize> = conjugacy_classes(&s4()).iter().map(|c| c.size).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 3, 6, 6, 8]);
        assert_eq!(sizes.iter().sum::<usize>(), 24);
        let classes = conjugacy_classes(&s4());
        for (i, c) in classes.iter().enumerate() {
            assert_eq!(classes[c.inverse_class].inverse_class, i);
        }
    }

    #[test]
    fn cyclic_table() {
        let c3 = group(3, &[&[&[0, 1, 2]]]);
        let t = character_table(&c3).unwrap();
        let z = CycNumber::root_of_unity(3, 1);
        let z2 = CycNumber::root_of_unity(3, 2);
        let one = CycNumber::one();
        let rows: Vec<Vec<CycNumber>> = t.irreducibles.iter().map(|c| c.values.clone()).collect();
        assert!(rows.contains(&vec![one.clone(), one.clone(), one.clone()]));
        assert!(rows.contains(&vec![one.clone(), z.clone(), z2.clone()]));
        assert!(rows.contains(&vec![one, z2, z]));
    }

    #[test]
    fn s3_and_s4_tables() {
        let t = character_table(&s3()).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert!(t.irreducibles.iter().all(ClassFunction::is_rational));
        let t = character_table(&s4()).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
        assert!(t.irreducibles.iter().all(ClassFunction::is_rational));
        let chi = &t.irreducibles[3];
        let sgn = &t.irreducibles[0];
        let product = chi.mul(sgn);
        let ip = inner_product(chi, &product, &t);
        assert!(ip.is_zero() || inner_product(chi, chi, &t) == CycNumber::one());
        assert_eq!(inner_product(&t.trivial(), &t.regular_character(), &t), CycNumber::one());
    }

    #[test]
    fn linear_characters_of_small_groups() {
        let d8 = group(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        let mut orders: Vec<u64> = linear_characters(&d8).iter().map(character_order).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2]);
        let mut orders: Vec<u64> = linear_characters(&s4()).iter().map(character_order).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2]);
        let c3 = group(3, &[&[&[0, 1, 2]]]);
        let mut orders: Vec<u64> = linear_characters(&c3).iter().map(character_order).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 3, 3]);
    }

    #[test]
    fn linear_characters_match_the_table() {
        for g in [s3(), s4(), group(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]])] {
            let t = character_table(&g).unwrap();
            assert_eq!(linear_characters(&g), t.linear_characters());
        }
    }

    #[test]
    fn abelian_tables_agree() {
        let g = group(6, &[&[&[0, 1, 2, 3]], &[&[4, 5]]]);
        assert_eq!(character_table(&g).unwrap().irreducibles, dual_group_table(&g).irreducibles);
    }
}
