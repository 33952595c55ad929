//! Head characters of solvable groups: the recursive construction through
//! `H = LC`, per-layer records of the constituent maps, and verifiers for
//! the statements about their fields of values.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::units;
use crate::chartable::{character_order, character_table, linear_characters, CharTable, ClassFunction};
use crate::clifford::{
    ext_set, invariant_constituent_down, invariant_constituent_up, invariant_irreducibles,
    is_invariant, restrict, FieldMultisetCheck, SubTable,
};
use crate::error::{Error, Result};
use crate::permgroup::{Group, Subgroup};
use crate::structure::{
    carter_subgroup, derived_subgroup_of, frattini_of_p_group, is_nilpotent, is_solvable,
    nilpotent_residual, normal_subgroups, sylow_subgroup,
};
use crate::{canonical_cyclotomic_conductor, CycNumber, FieldDescriptor, Rational};

/// What one step of the recursion saw, kept for the verifiers.
#[derive(Clone, Debug)]
pub struct Layer {
    pub group_order: usize,
    pub k_order: usize,
    pub l_order: usize,
    pub h_order: usize,
    /// `(θ, θ′)` over the `C`-invariant irreducibles of `K`.
    pub down: Vec<(usize, usize)>,
    /// `(φ, φ̃)` over the `C`-invariant irreducibles of `L`.
    pub up: Vec<(usize, usize)>,
    /// For each `(θ, θ′)` in `down`: whether `θ` extends to `G` and whether
    /// `θ′` extends to `H`.
    pub extends: Vec<(bool, bool)>,
    /// Field multisets of `Ext(G|θ)` and `Ext(H|θ′)` for `θ ∈ Δ`.
    pub field_checks: Vec<FieldMultisetCheck>,
    /// Number of `(θ, σ)` pairs where `(θ^σ)′ = (θ′)^σ` was tested, and how
    /// many failed.
    pub galois_pairs: usize,
    pub galois_failures: usize,
}

impl Layer {
    /// `′` and `~` are mutually inverse bijections.
    pub fn maps_are_inverse(&self) -> bool {
        let down: BTreeMap<usize, usize> = self.down.iter().copied().collect();
        let up: BTreeMap<usize, usize> = self.up.iter().copied().collect();
        down.len() == up.len()
            && down.iter().all(|(t, p)| up.get(p) == Some(t))
            && up.iter().all(|(p, t)| down.get(t) == Some(p))
    }

    pub fn extension_equivalence_holds(&self) -> bool {
        self.extends.iter().all(|(a, b)| a == b)
    }

    pub fn fields_agree(&self) -> bool {
        self.field_checks.iter().all(FieldMultisetCheck::passes)
    }
}

/// `H(G)` as indices into the group's table, with the Carter subgroup used
/// and the layers of the recursion (outermost first).
#[derive(Clone, Debug)]
pub struct HeadSet {
    pub carter: Subgroup,
    pub heads: Vec<usize>,
    pub layers: Vec<Layer>,
}

fn abelianization_order(g: &Group, s: &Subgroup) -> usize {
    s.order() / derived_subgroup_of(g, s).order()
}

/// Head characters, with a Carter subgroup computed here.
pub fn head_characters(g: &Group, table: &CharTable) -> Result<HeadSet> {
    if !is_solvable(g) {
        return Err(Error::NotSolvable);
    }
    let c = carter_subgroup(g)?;
    head_characters_with_carter(g, table, &c)
}

/// Head characters relative to a given Carter subgroup `c`.
pub fn head_characters_with_carter(g: &Group, table: &CharTable, c: &Subgroup) -> Result<HeadSet> {
    if !is_solvable(g) {
        return Err(Error::NotSolvable);
    }
    let top = SubTable::whole(g, table.clone());
    let mut layers = Vec::new();
    let heads = heads_rec(&top, c, &mut layers)?;
    Ok(HeadSet {
        carter: c.clone(),
        heads,
        layers,
    })
}

fn heads_rec(gt: &SubTable, c: &Subgroup, layers: &mut Vec<Layer>) -> Result<Vec<usize>> {
    let g = &gt.group;
    let expected = abelianization_order(g, c);
    let heads: Vec<usize> = if is_nilpotent(g) {
        (0..gt.irreducible_count())
            .filter(|&i| gt.irreducible(i).degree() == 1)
            .collect()
    } else {
        let k = SubTable::new(g, nilpotent_residual(g))?;
        let l = SubTable::new(g, derived_subgroup_of(g, &k.sub))?;
        let h_sub = g.product_set(&l.sub, c)?;
        if h_sub.order() == g.order() {
            return Err(Error::TheoremViolation("H = LC is not a proper subgroup".into()));
        }
        let h = SubTable::new(g, h_sub)?;
        let h_top = SubTable::whole(&h.group, h.table.clone());
        let c_local = h.sub.localize(c).expect("C lies in H");

        let layer_index = layers.len();
        let h_heads = heads_rec(&h_top, &c_local, layers)?;

        let mut xi = Vec::new();
        for &psi in &h_heads {
            let r = restrict(h.irreducible(psi), &h, &l);
            let idx = l.position(&r).ok_or_else(|| {
                Error::TheoremViolation("a head character of H restricts reducibly to L".into())
            })?;
            xi.push(idx);
        }

        let mut layer = Layer {
            group_order: g.order(),
            k_order: k.order(),
            l_order: l.order(),
            h_order: h.order(),
            down: Vec::new(),
            up: Vec::new(),
            extends: Vec::new(),
            field_checks: Vec::new(),
            galois_pairs: 0,
            galois_failures: 0,
        };
        let exponent = g.exponent() as u64;
        let whole = g.whole();
        let mut heads = Vec::new();
        for theta_idx in invariant_irreducibles(g, &k, c) {
            let theta = k.irreducible(theta_idx).clone();
            let phi_idx = invariant_constituent_down(g, &k, &l, c, &theta)?;
            let phi = l.irreducible(phi_idx).clone();
            layer.down.push((theta_idx, phi_idx));

            let ext_g = ext_set(gt, &k, &theta);
            let ext_h = ext_set(&h, &l, &phi);
            layer.extends.push((!ext_g.members.is_empty(), !ext_h.members.is_empty()));

            for s in units(exponent).into_iter().filter(|&s| s != 1) {
                let s = s as i64;
                let image = theta.galois(s)?;
                let down = invariant_constituent_down(g, &k, &l, c, &image)?;
                layer.galois_pairs += 1;
                if *l.irreducible(down) != phi.galois(s)? {
                    layer.galois_failures += 1;
                }
            }

            if is_invariant(g, &k, &theta, &whole) && xi.contains(&phi_idx) {
                layer.field_checks.push(FieldMultisetCheck {
                    upper: ext_g.fields(gt),
                    lower: ext_h.fields(&h),
                });
                heads.extend(ext_g.members);
            }
        }
        for phi_idx in invariant_irreducibles(g, &l, c) {
            let phi = l.irreducible(phi_idx).clone();
            layer.up.push((phi_idx, invariant_constituent_up(g, &l, &k, c, &phi)?));
        }
        // outermost layer first
        layers.insert(layer_index, layer);
        heads.sort_unstable();
        heads.dedup();
        heads
    };
    if heads.len() != expected {
        return Err(Error::TheoremViolation(format!(
            "{} head characters for a group of order {} but |C/C'| = {expected}",
            heads.len(),
            g.order()
        )));
    }
    Ok(heads)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictReport {
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
}

impl VerdictReport {
    fn new(verdict: Verdict, diagnostics: Vec<String>) -> Self {
        VerdictReport { verdict, diagnostics }
    }
}

/// Everything the verifiers need about one group, computed once.
#[derive(Clone, Debug)]
pub struct HeadAnalysis {
    pub group: Group,
    pub table: CharTable,
    pub heads: HeadSet,
    /// Orders of the linear characters of `C`, ascending.
    pub lin_c_orders: Vec<u64>,
}

impl HeadAnalysis {
    pub fn new(g: &Group) -> Result<Self> {
        if !is_solvable(g) {
            return Err(Error::NotSolvable);
        }
        let table = character_table(g)?;
        let heads = head_characters(g, &table)?;
        let c_group = g.subgroup_as_group(&heads.carter);
        let mut lin_c_orders: Vec<u64> = linear_characters(&c_group).iter().map(character_order).collect();
        lin_c_orders.sort_unstable();
        Ok(HeadAnalysis {
            group: g.clone(),
            table,
            heads,
            lin_c_orders,
        })
    }

    pub fn head(&self, i: usize) -> &ClassFunction {
        &self.table.irreducibles[i]
    }

    pub fn head_fields(&self) -> Vec<FieldDescriptor> {
        self.heads.heads.iter().map(|&i| self.head(i).field()).collect()
    }

    pub fn head_degrees(&self) -> Vec<i64> {
        self.heads.heads.iter().map(|&i| self.head(i).degree()).collect()
    }

    /// Head fields are cyclotomic and their conductors match the orders of
    /// the linear characters of `C` as multisets.
    pub fn verify_head_fields(&self) -> VerdictReport {
        let fields = self.head_fields();
        let non_cyclotomic: Vec<String> = fields
            .iter()
            .filter(|f| !f.is_cyclotomic())
            .map(ToString::to_string)
            .collect();
        let mut head_conductors: Vec<u32> = fields.iter().map(|f| f.conductor).collect();
        head_conductors.sort_unstable();
        let mut lin_conductors: Vec<u32> = self
            .lin_c_orders
            .iter()
            .map(|&o| canonical_cyclotomic_conductor(o as u32))
            .collect();
        lin_conductors.sort_unstable();
        let mut diagnostics = vec![
            format!("head conductors {head_conductors:?}"),
            format!("Lin(C) orders {:?} -> conductors {lin_conductors:?}", self.lin_c_orders),
        ];
        if !non_cyclotomic.is_empty() {
            diagnostics.push(format!("non-cyclotomic head fields {non_cyclotomic:?}"));
        }
        VerdictReport::new(
            Verdict::from_bool(non_cyclotomic.is_empty() && head_conductors == lin_conductors),
            diagnostics,
        )
    }

    /// At least `|P/Φ(P)|` rational irreducibles, `P` a Sylow 2-subgroup of `C`.
    pub fn verify_rational_count(&self) -> VerdictReport {
        let g = &self.group;
        let c = &self.heads.carter;
        let m = if c.order() % 2 == 1 {
            1
        } else {
            let cg = g.subgroup_as_group(c);
            let p = sylow_subgroup(&cg, 2).expect("2 divides |C|");
            let phi = frattini_of_p_group(&cg, &p).expect("Sylow subgroups are p-groups");
            p.order() / phi.order()
        };
        let rational = self
            .table
            .irreducibles
            .iter()
            .filter(|chi| chi.field() == FieldDescriptor::rationals())
            .count();
        VerdictReport::new(
            Verdict::from_bool(rational >= m),
            vec![format!("m = {m}, rational irreducibles = {rational}")],
        )
    }

    /// If the only cyclotomic field of values is `Q`, Sylow 2-subgroups are
    /// self-normalizing and conjugate to `C`; skips otherwise.
    pub fn verify_sylow_self_normalizing(&self) -> VerdictReport {
        let g = &self.group;
        let offending: Vec<String> = self
            .table
            .irreducibles
            .iter()
            .map(ClassFunction::field)
            .filter(|f| f.is_cyclotomic() && f.conductor != 1)
            .map(|f| f.to_string())
            .collect();
        if !offending.is_empty() {
            return VerdictReport::new(
                Verdict::Skip,
                vec![format!("hypothesis not met: cyclotomic fields {offending:?}")],
            );
        }
        let p = if g.order() % 2 == 0 {
            sylow_subgroup(g, 2).expect("2 divides |G|")
        } else {
            g.trivial_subgroup()
        };
        let self_normalizing = g.normalizer(&p) == p;
        let conjugate = g.are_conjugate(&p, &self.heads.carter);
        VerdictReport::new(
            Verdict::from_bool(self_normalizing && conjugate),
            vec![format!(
                "|P| = {}, |N(P)| = {}, C conjugate to P: {conjugate}",
                p.order(),
                g.normalizer(&p).order()
            )],
        )
    }

    /// Degree divisibility, irreducible restriction to normal subgroups with
    /// nilpotent quotient, stability under linear characters, and the class
    /// number bound.
    pub fn verify_head_properties(&self) -> VerdictReport {
        let g = &self.group;
        let t = &self.table;
        let c = &self.heads.carter;
        let heads = &self.heads.heads;
        let mut failures = Vec::new();

        let index = (g.order() / c.order()) as i64;
        for &i in heads {
            if index % self.head(i).degree() != 0 {
                failures.push(format!("degree {} does not divide |G:C| = {index}", self.head(i).degree()));
            }
        }

        let k = nilpotent_residual(g);
        let mut normals_checked = 0;
        for m in normal_subgroups(g).into_iter().filter(|m| k.is_subset_of(m)) {
            normals_checked += 1;
            let inside: Vec<usize> = (0..t.class_count())
                .filter(|&cl| m.contains(t.classes[cl].representative))
                .collect();
            for &i in heads {
                let eta = self.head(i);
                let norm: CycNumber = inside
                    .iter()
                    .map(|&cl| {
                        (&eta.values[cl] * &eta.values[cl].conj())
                            .scale(&Rational::from_integer(t.classes[cl].size.into()))
                    })
                    .sum();
                if norm != CycNumber::from_int(m.order() as i64) {
                    failures.push(format!("head {i} restricts reducibly to a normal subgroup of order {}", m.order()));
                }
            }
        }

        let linear: Vec<usize> = (0..t.irreducibles.len())
            .filter(|&i| t.irreducibles[i].degree() == 1)
            .collect();
        for &lambda in &linear {
            if !heads.contains(&lambda) {
                failures.push(format!("linear character {lambda} is not a head character"));
            }
            let mut moved: Vec<usize> = heads
                .iter()
                .filter_map(|&i| t.position(&t.irreducibles[lambda].mul(self.head(i))))
                .collect();
            moved.sort_unstable();
            if &moved != heads {
                failures.push(format!("multiplying by linear character {lambda} does not permute the heads"));
            }
        }

        let lin_c = heads.len();
        let k_g = t.class_count();
        let abelian = g.is_abelian();
        if lin_c > k_g || (lin_c == k_g) != abelian {
            failures.push(format!("|C/C'| = {lin_c}, k(G) = {k_g}, abelian = {abelian}"));
        }

        let mut diagnostics = vec![
            format!("|G:C| = {index}, head degrees {:?}", self.head_degrees()),
            format!("{normals_checked} normal subgroups with nilpotent quotient"),
            format!("|C/C'| = {lin_c}, k(G) = {k_g}, abelian = {abelian}"),
        ];
        let ok = failures.is_empty();
        diagnostics.extend(failures);
        VerdictReport::new(Verdict::from_bool(ok), diagnostics)
    }

    /// The invariant-constituent maps are inverse bijections, extension to
    /// `G` and to `H` agree, and `′` commutes with Galois action, on every
    /// layer.
    pub fn verify_constituent_maps(&self) -> VerdictReport {
        let layers = &self.heads.layers;
        if layers.is_empty() {
            return VerdictReport::new(Verdict::Skip, vec!["nilpotent: no recursion layers".into()]);
        }
        let mut ok = true;
        let mut diagnostics = Vec::new();
        for layer in layers {
            let inverse = layer.maps_are_inverse();
            let extension = layer.extension_equivalence_holds();
            let galois = layer.galois_failures == 0;
            ok &= inverse && extension && galois;
            diagnostics.push(format!(
                "|G| = {}, |K| = {}, |L| = {}: {} invariant pairs, inverse {inverse}, extension equivalence {extension}, Galois {}/{}",
                layer.group_order,
                layer.k_order,
                layer.l_order,
                layer.down.len(),
                layer.galois_pairs - layer.galois_failures,
                layer.galois_pairs
            ));
        }
        VerdictReport::new(Verdict::from_bool(ok), diagnostics)
    }

    /// `Ext(G|θ)` and `Ext(H|θ′)` have the same fields of values, for every
    /// `θ ∈ Δ` on every layer.
    pub fn verify_extension_fields(&self) -> VerdictReport {
        let layers = &self.heads.layers;
        if layers.is_empty() {
            return VerdictReport::new(Verdict::Skip, vec!["nilpotent: no recursion layers".into()]);
        }
        let mut ok = true;
        let mut diagnostics = Vec::new();
        for layer in layers {
            for check in &layer.field_checks {
                ok &= check.passes();
                let show = |v: &[FieldDescriptor]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
                diagnostics.push(format!(
                    "|G| = {}: {{{}}} vs {{{}}}",
                    layer.group_order,
                    show(&check.upper),
                    show(&check.lower)
                ));
            }
        }
        VerdictReport::new(Verdict::from_bool(ok), diagnostics)
    }

    /// Recomputing with a conjugate Carter subgroup gives the same heads.
    pub fn verify_carter_choice(&self) -> Result<VerdictReport> {
        let g = &self.group;
        let c = &self.heads.carter;
        let Some(other) = g.conjugates(c).into_iter().find(|d| d != c) else {
            return Ok(VerdictReport::new(Verdict::Skip, vec!["C is normal".into()]));
        };
        let again = head_characters_with_carter(g, &self.table, &other)?;
        Ok(VerdictReport::new(
            Verdict::from_bool(again.heads == self.heads.heads),
            vec![format!("recomputed with a conjugate of order {}", other.order())],
        ))
    }

    pub fn verify(&self, check: Check) -> Result<VerdictReport> {
        Ok(match check {
            Check::HeadFields => self.verify_head_fields(),
            Check::RationalCount => self.verify_rational_count(),
            Check::SylowSelfNormalizing => self.verify_sylow_self_normalizing(),
            Check::HeadProperties => self.verify_head_properties(),
            Check::ConstituentMaps => self.verify_constituent_maps(),
            Check::ExtensionFields => self.verify_extension_fields(),
            Check::CarterChoice => self.verify_carter_choice()?,
        })
    }

    pub fn report(&self, name: &str) -> Result<HeadReport> {
        let mut verdicts = BTreeMap::new();
        for check in Check::ALL {
            verdicts.insert(check.name().to_string(), self.verify(check)?.verdict);
        }
        Ok(HeadReport {
            group: name.to_string(),
            order: self.group.order(),
            carter_order: self.heads.carter.order(),
            head_degrees: self.head_degrees(),
            head_fields: self
                .head_fields()
                .into_iter()
                .map(|f| FieldSummary {
                    conductor: f.conductor,
                    cyclotomic: f.is_cyclotomic(),
                })
                .collect(),
            lin_c_orders: self.lin_c_orders.clone(),
            verdicts,
        })
    }
}

/// The named checks run on every solvable group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Check {
    HeadFields,
    RationalCount,
    SylowSelfNormalizing,
    HeadProperties,
    ConstituentMaps,
    ExtensionFields,
    CarterChoice,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::HeadFields,
        Check::RationalCount,
        Check::SylowSelfNormalizing,
        Check::HeadProperties,
        Check::ConstituentMaps,
        Check::ExtensionFields,
        Check::CarterChoice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::HeadFields => "head_fields",
            Check::RationalCount => "rational_count",
            Check::SylowSelfNormalizing => "sylow_self_normalizing",
            Check::HeadProperties => "head_properties",
            Check::ConstituentMaps => "constituent_maps",
            Check::ExtensionFields => "extension_fields",
            Check::CarterChoice => "carter_choice",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldSummary {
    pub conductor: u32,
    pub cyclotomic: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HeadReport {
    pub group: String,
    pub order: usize,
    pub carter_order: usize,
    pub head_degrees: Vec<i64>,
    pub head_fields: Vec<FieldSummary>,
    pub lin_c_orders: Vec<u64>,
    pub verdicts: BTreeMap<String, Verdict>,
}

/// Facts about `N_G(P)` for a Sylow `p`-subgroup `P`, next to the
/// non-cyclotomic fields of values of `G`: the odd-prime analogue of the
/// head-field statement can fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowNormalizerControl {
    pub normalizer_order: usize,
    /// Every irreducible of `N_G(P)/P′` is rational-valued.
    pub quotient_rational: bool,
    /// `(degree, field)` of every irreducible with a non-cyclotomic field.
    pub non_cyclotomic: Vec<(i64, FieldDescriptor)>,
}

pub fn sylow_normalizer_control(g: &Group, table: &CharTable, p: u64) -> Result<SylowNormalizerControl> {
    let sylow = sylow_subgroup(g, p)?;
    let n = g.normalizer(&sylow);
    let ng = g.subgroup_as_group(&n);
    let p_local = n.localize(&sylow).expect("P lies in its normalizer");
    let q = ng.quotient(&derived_subgroup_of(&ng, &p_local))?;
    let quotient_rational = character_table(&q.group)?
        .irreducibles
        .iter()
        .all(ClassFunction::is_rational);
    let non_cyclotomic = table
        .irreducibles
        .iter()
        .map(|chi| (chi.degree(), chi.field()))
        .filter(|(_, f)| !f.is_cyclotomic())
        .collect();
    Ok(SylowNormalizerControl {
        normalizer_order: n.order(),
        quotient_rational,
        non_cyclotomic,
    })
}

/// `|C/C'|` for a Carter subgroup, the expected number of head characters.
pub fn carter_abelianization_order(g: &Group, c: &Subgroup) -> usize {
    abelianization_order(g, c)
}
