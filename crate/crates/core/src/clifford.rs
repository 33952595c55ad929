//! Restriction, induction, conjugation action on irreducibles, and the
//! canonical invariant-constituent maps between a normal subgroup and a
//! normal subgroup below it with abelian quotient.
//!
//! All subgroups involved live in one ambient group; each carries its own
//! enumerated group and character table in a [`SubTable`].

use num_traits::{Signed, Zero};

use crate::chartable::{character_table, inner_product, CharTable, ClassFunction};
use crate::error::{Error, Result};
use crate::permgroup::{Group, Subgroup};
use crate::{CycNumber, FieldDescriptor, Rational};

/// A subgroup of an ambient group together with its character table. Local
/// element `i` of `group` is ambient element `sub.elements()[i]`.
#[derive(Clone, Debug)]
pub struct SubTable {
    pub sub: Subgroup,
    pub group: Group,
    pub table: CharTable,
}

impl SubTable {
    pub fn new(ambient: &Group, sub: Subgroup) -> Result<Self> {
        let group = ambient.subgroup_as_group(&sub);
        let table = character_table(&group)?;
        Ok(SubTable { sub, group, table })
    }

    /// Reuses an existing table for the whole ambient group.
    pub fn whole(ambient: &Group, table: CharTable) -> Self {
        SubTable {
            sub: ambient.whole(),
            group: ambient.clone(),
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.sub.order()
    }

    /// Class of an ambient element lying in this subgroup.
    pub fn class_of(&self, x: usize) -> usize {
        self.table.class_of[self.sub.local_index(x).expect("element lies in the subgroup")]
    }

    /// Ambient index of the representative of a class.
    pub fn representative(&self, class: usize) -> usize {
        self.sub.elements()[self.table.classes[class].representative]
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.table.irreducibles[i]
    }

    pub fn irreducible_count(&self) -> usize {
        self.table.irreducibles.len()
    }

    /// Index of an irreducible character of this subgroup.
    pub fn position(&self, chi: &ClassFunction) -> Option<usize> {
        self.table.position(chi)
    }
}

/// Restriction from `a` to a subgroup `b` of it.
pub fn restrict(chi: &ClassFunction, a: &SubTable, b: &SubTable) -> ClassFunction {
    ClassFunction::new(
        (0..b.table.class_count())
            .map(|c| chi.values[a.class_of(b.representative(c))].clone())
            .collect(),
    )
}

/// Induction from `b` to a group `a` containing it:
/// `φ^A(c) = |A| / (|B| |c|) · Σ_{d ⊆ c} |d| φ(d)` over the `B`-classes `d`.
pub fn induce(phi: &ClassFunction, b: &SubTable, a: &SubTable) -> ClassFunction {
    let mut acc = vec![CycNumber::zero(); a.table.class_count()];
    for (d, class) in b.table.classes.iter().enumerate() {
        let c = a.class_of(b.representative(d));
        acc[c] = &acc[c] + &phi.values[d].scale(&Rational::from_integer(class.size.into()));
    }
    ClassFunction::new(
        acc.into_iter()
            .zip(&a.table.classes)
            .map(|(v, c)| v.scale(&Rational::new(a.order().into(), (b.order() * c.size).into())))
            .collect(),
    )
}

/// Irreducible constituents with their multiplicities, in table order.
pub fn constituents(f: &ClassFunction, table: &CharTable) -> Result<Vec<(usize, u64)>> {
    let mut out = Vec::new();
    for (i, chi) in table.irreducibles.iter().enumerate() {
        let m = inner_product(f, chi, table);
        let q = m
            .to_scalar()
            .ok_or_else(|| Error::NotACharacter(format!("multiplicity {m} is irrational")))?;
        if !q.is_integer() || q.is_negative() {
            return Err(Error::NotACharacter(format!("multiplicity {q}")));
        }
        if !q.is_zero() {
            out.push((i, u64::try_from(q.to_integer()).unwrap()));
        }
    }
    Ok(out)
}

/// `χ^g(x) = χ(g x g⁻¹)` for `g` in the ambient group normalizing `n`.
pub fn conjugate_character(ambient: &Group, n: &SubTable, chi: &ClassFunction, g: usize) -> ClassFunction {
    let g_inv = ambient.inv(g);
    ClassFunction::new(
        (0..n.table.class_count())
            .map(|c| chi.values[n.class_of(ambient.conj(n.representative(c), g_inv))].clone())
            .collect(),
    )
}

pub fn is_invariant(ambient: &Group, n: &SubTable, chi: &ClassFunction, s: &Subgroup) -> bool {
    s.generators()
        .iter()
        .all(|&g| conjugate_character(ambient, n, chi, g) == *chi)
}

/// Orbits of `s` on `Irr(n)` by conjugation, as sorted index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrAction {
    pub orbits: Vec<Vec<usize>>,
}

impl IrrAction {
    pub fn fixed(&self) -> Vec<usize> {
        self.orbits.iter().filter(|o| o.len() == 1).map(|o| o[0]).collect()
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.orbits.iter().any(|o| o == &[i])
    }
}

pub fn action_on_irr(ambient: &Group, s: &Subgroup, n: &SubTable) -> Result<IrrAction> {
    let count = n.irreducible_count();
    // image of each irreducible under each generator
    let mut images: Vec<Vec<usize>> = Vec::new();
    for &g in s.generators() {
        let row = (0..count)
            .map(|i| {
                n.position(&conjugate_character(ambient, n, n.irreducible(i), g))
                    .ok_or(Error::NotNormal)
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(row);
    }
    let mut seen = vec![false; count];
    let mut orbits = Vec::new();
    for start in 0..count {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            for row in &images {
                let j = row[orbit[i]];
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(IrrAction { orbits })
}

/// Elements of `s` fixing `chi`.
pub fn stabilizer(ambient: &Group, s: &Subgroup, n: &SubTable, chi: &ClassFunction) -> Subgroup {
    let fixing = s
        .elements()
        .iter()
        .copied()
        .filter(|&g| conjugate_character(ambient, n, chi, g) == *chi)
        .collect();
    ambient.subgroup_from_elements(fixing)
}

/// Indices of the `c`-invariant irreducibles of `n`.
pub fn invariant_irreducibles(ambient: &Group, n: &SubTable, c: &Subgroup) -> Vec<usize> {
    (0..n.irreducible_count())
        .filter(|&i| is_invariant(ambient, n, n.irreducible(i), c))
        .collect()
}

fn unique_invariant(
    ambient: &Group,
    target: &SubTable,
    f: &ClassFunction,
    c: &Subgroup,
    what: &str,
) -> Result<usize> {
    let found: Vec<usize> = constituents(f, &target.table)?
        .into_iter()
        .map(|(i, _)| i)
        .filter(|&i| is_invariant(ambient, target, target.irreducible(i), c))
        .collect();
    match found.as_slice() {
        [i] => Ok(*i),
        _ => Err(Error::TheoremViolation(format!(
            "{what} has {} C-invariant constituents, expected exactly one",
            found.len()
        ))),
    }
}

/// `θ ↦ θ′`: the unique `C`-invariant constituent of `θ_L`, for a
/// `C`-invariant irreducible `θ` of `K`. Returns an index into `l`'s table.
pub fn invariant_constituent_down(
    ambient: &Group,
    k: &SubTable,
    l: &SubTable,
    c: &Subgroup,
    theta: &ClassFunction,
) -> Result<usize> {
    if !is_invariant(ambient, k, theta, c) {
        return Err(Error::Precondition("θ is not C-invariant".into()));
    }
    unique_invariant(ambient, l, &restrict(theta, k, l), c, "restriction to L")
}

/// `φ ↦ φ̃`: the unique `C`-invariant constituent of `φ^K`, for a
/// `C`-invariant irreducible `φ` of `L`. Returns an index into `k`'s table.
pub fn invariant_constituent_up(
    ambient: &Group,
    l: &SubTable,
    k: &SubTable,
    c: &Subgroup,
    phi: &ClassFunction,
) -> Result<usize> {
    if !is_invariant(ambient, l, phi, c) {
        return Err(Error::Precondition("φ is not C-invariant".into()));
    }
    unique_invariant(ambient, k, &induce(phi, l, k), c, "induction to K")
}

/// `Ext(G|θ)`: irreducibles of `g` restricting to `θ` on the normal
/// subgroup `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtSet {
    pub theta: ClassFunction,
    pub members: Vec<usize>,
}

pub fn ext_set(g: &SubTable, n: &SubTable, theta: &ClassFunction) -> ExtSet {
    let members = (0..g.irreducible_count())
        .filter(|&i| {
            let chi = g.irreducible(i);
            chi.values[0] == theta.values[0] && restrict(chi, g, n) == *theta
        })
        .collect();
    ExtSet {
        theta: theta.clone(),
        members,
    }
}

impl ExtSet {
    /// Sorted multiset of the members' fields of values.
    pub fn fields(&self, g: &SubTable) -> Vec<FieldDescriptor> {
        let mut f: Vec<FieldDescriptor> = self.members.iter().map(|&i| g.irreducible(i).field()).collect();
        f.sort();
        f
    }
}

/// Both sides of the field-of-values comparison between `Ext(G|θ)` and
/// `Ext(H|θ′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMultisetCheck {
    pub upper: Vec<FieldDescriptor>,
    pub lower: Vec<FieldDescriptor>,
}

impl FieldMultisetCheck {
    pub fn passes(&self) -> bool {
        self.upper == self.lower
    }
}

/// Compares the field multisets of `Ext(G|θ)` and `Ext(H|θ′)` for a
/// `G`-invariant `θ ∈ Irr(K)`, where `H = LC`.
pub fn ext_field_multiset_check(
    g: &SubTable,
    k: &SubTable,
    l: &SubTable,
    h: &SubTable,
    c: &Subgroup,
    theta: &ClassFunction,
) -> Result<FieldMultisetCheck> {
    if !is_invariant(&g.group, k, theta, &g.sub) {
        return Err(Error::Precondition("θ is not G-invariant".into()));
    }
    let phi = l.irreducible(invariant_constituent_down(&g.group, k, l, c, theta)?).clone();
    Ok(FieldMultisetCheck {
        upper: ext_set(g, k, theta).fields(g),
        lower: ext_set(h, l, &phi).fields(h),
    })
}

/// True when `f` is an integer combination of irreducibles with
/// nonnegative coefficients summing to a positive degree.
pub fn is_character(f: &ClassFunction, table: &CharTable) -> bool {
    constituents(f, table).is_ok_and(|c| !c.is_empty())
}

pub fn is_irreducible(f: &ClassFunction, table: &CharTable) -> bool {
    matches!(constituents(f, table).as_deref(), Ok([(_, 1)]))
}
