use headchar::chartable::{character_table, inner_product, ClassFunction};
use headchar::clifford::*;
use headchar::corpus::builtin;
use headchar::permgroup::{Group, Permutation, Subgroup};
use headchar::structure::{carter_subgroup, derived_subgroup_of, nilpotent_residual};
use headchar::{CycNumber, FieldDescriptor};

fn catalog(name: &str) -> Group {
    builtin(name).unwrap().build().unwrap()
}

fn whole(g: &Group) -> SubTable {
    SubTable::whole(g, character_table(g).unwrap())
}

fn sub(g: &Group, gens: &[&[&[u32]]]) -> Subgroup {
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|c| Permutation::from_cycles(g.degree(), c).unwrap())
        .collect();
    g.subgroup_generated(&perms).unwrap()
}

struct S4Setup {
    g: Group,
    gt: SubTable,
    k: SubTable,
    l: SubTable,
    c: Subgroup,
}

fn s4() -> S4Setup {
    let g = catalog("S4");
    let gt = whole(&g);
    let k = SubTable::new(&g, nilpotent_residual(&g)).unwrap();
    let l = SubTable::new(&g, derived_subgroup_of(&g, &k.sub)).unwrap();
    let c = carter_subgroup(&g).unwrap();
    assert_eq!((k.order(), l.order(), c.order()), (12, 4, 8));
    S4Setup { g, gt, k, l, c }
}

fn degree3(t: &SubTable) -> ClassFunction {
    t.table.irreducibles.iter().find(|x| x.degree() == 3).unwrap().clone()
}

#[test]
fn restriction_examples() {
    let s = s4();
    let sgn = s.gt.table.linear_characters().into_iter().find(|x| *x != s.gt.table.trivial()).unwrap();
    assert_eq!(restrict(&sgn, &s.gt, &s.k), s.k.table.trivial());
    assert_eq!(restrict(&s.gt.table.trivial(), &s.gt, &s.l), s.l.table.trivial());

    let chi3 = s.gt.table.irreducibles[3].clone();
    let on_v4 = restrict(&chi3, &s.gt, &s.l);
    let parts = constituents(&on_v4, &s.l.table).unwrap();
    let trivial = s.l.position(&s.l.table.trivial()).unwrap();
    assert_eq!(parts.len(), 3);
    assert!(parts.iter().all(|&(i, m)| m == 1 && i != trivial));
}

#[test]
fn regular_character_constituents() {
    let g = catalog("S3");
    let t = character_table(&g).unwrap();
    let parts = constituents(&t.regular_character(), &t).unwrap();
    let mult: Vec<u64> = parts.iter().map(|&(_, m)| m).collect();
    assert_eq!(mult, vec![1, 1, 2]);
    assert_eq!(constituents(&t.trivial(), &t).unwrap().len(), 1);
    let bogus = ClassFunction::new(vec![CycNumber::from_int(1); 3]).add(&t.irreducibles[2]);
    assert!(constituents(&bogus.scale(&headchar::Rational::new(1.into(), 2.into())), &t).is_err());
}

#[test]
fn induction_examples() {
    let g = catalog("F21");
    let gt = whole(&g);
    let trivial = SubTable::new(&g, g.trivial_subgroup()).unwrap();
    assert_eq!(induce(&trivial.table.trivial(), &trivial, &gt), gt.table.regular_character());

    let c7 = SubTable::new(&g, nilpotent_residual(&g)).unwrap();
    assert_eq!(c7.order(), 7);
    let lambda = c7.table.irreducibles.iter().find(|x| !x.is_rational()).unwrap();
    let induced = induce(lambda, &c7, &gt);
    assert_eq!(induced.degree(), 3);
    assert!(is_irreducible(&induced, &gt.table));
}

#[test]
fn frobenius_reciprocity() {
    for name in ["S4", "GL2_3", "SL2_3", "S3xS3", "F20"] {
        let g = catalog(name);
        let gt = whole(&g);
        let subs = [
            carter_subgroup(&g).unwrap(),
            nilpotent_residual(&g),
            headchar::structure::sylow_subgroup(&g, 2).unwrap(),
        ];
        for s in subs {
            let st = SubTable::new(&g, s).unwrap();
            for phi in &st.table.irreducibles {
                let up = induce(phi, &st, &gt);
                for chi in &gt.table.irreducibles {
                    assert_eq!(
                        inner_product(&up, chi, &gt.table),
                        inner_product(phi, &restrict(chi, &gt, &st), &st.table),
                        "{name}"
                    );
                }
            }
        }
    }
}

#[test]
fn conjugation_action_examples() {
    let g = catalog("S3");
    let a3 = SubTable::new(&g, nilpotent_residual(&g)).unwrap();
    let c = sub(&g, &[&[&[0, 1]]]);
    let action = action_on_irr(&g, &c, &a3).unwrap();
    let trivial = a3.position(&a3.table.trivial()).unwrap();
    assert_eq!(action.fixed(), vec![trivial]);
    assert_eq!(action.orbits.len(), 2);
    assert_eq!(invariant_irreducibles(&g, &a3, &c), vec![trivial]);

    let s = s4();
    let action = action_on_irr(&s.g, &s.c, &s.l).unwrap();
    let mut sizes: Vec<usize> = action.orbits.iter().map(Vec::len).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 1, 2]);

    // a G-invariant character has the whole group as stabilizer
    let chi3 = degree3(&s.k);
    assert!(is_invariant(&s.g, &s.k, &chi3, &s.g.whole()));
    assert_eq!(stabilizer(&s.g, &s.g.whole(), &s.k, &chi3), s.g.whole());
}

#[test]
fn prime_and_tilde_maps_on_s4() {
    let s = s4();
    let chi3 = degree3(&s.k);
    let down = invariant_constituent_down(&s.g, &s.k, &s.l, &s.c, &chi3).unwrap();
    let phi = s.l.irreducible(down).clone();
    assert_eq!(phi.degree(), 1);
    assert_ne!(phi, s.l.table.trivial());
    assert!(is_invariant(&s.g, &s.l, &phi, &s.c));
    let up = invariant_constituent_up(&s.g, &s.l, &s.k, &s.c, &phi).unwrap();
    assert_eq!(s.k.irreducible(up), &chi3);

    let one_k = s.k.table.trivial();
    let down = invariant_constituent_down(&s.g, &s.k, &s.l, &s.c, &one_k).unwrap();
    assert_eq!(s.l.irreducible(down), &s.l.table.trivial());

    // every C-invariant θ round-trips
    for i in invariant_irreducibles(&s.g, &s.k, &s.c) {
        let theta = s.k.irreducible(i).clone();
        let d = invariant_constituent_down(&s.g, &s.k, &s.l, &s.c, &theta).unwrap();
        let u = invariant_constituent_up(&s.g, &s.l, &s.k, &s.c, &s.l.irreducible(d).clone()).unwrap();
        assert_eq!(u, i);
    }
}

#[test]
fn prime_map_on_s3() {
    let g = catalog("S3");
    let k = SubTable::new(&g, nilpotent_residual(&g)).unwrap();
    let l = SubTable::new(&g, g.trivial_subgroup()).unwrap();
    let c = carter_subgroup(&g).unwrap();
    let down = invariant_constituent_down(&g, &k, &l, &c, &k.table.trivial()).unwrap();
    assert_eq!(l.irreducible(down), &l.table.trivial());
    let up = invariant_constituent_up(&g, &l, &k, &c, &l.table.trivial()).unwrap();
    assert_eq!(k.irreducible(up), &k.table.trivial());
}

#[test]
fn non_invariant_input_is_rejected() {
    let g = catalog("S3");
    let k = SubTable::new(&g, nilpotent_residual(&g)).unwrap();
    let l = SubTable::new(&g, g.trivial_subgroup()).unwrap();
    let c = carter_subgroup(&g).unwrap();
    let moved = k.table.irreducibles.iter().find(|x| !x.is_rational()).unwrap();
    assert!(invariant_constituent_down(&g, &k, &l, &c, moved).is_err());
    let gt = whole(&g);
    assert!(ext_set(&gt, &k, moved).members.is_empty());
}

#[test]
fn extension_sets_on_s4() {
    let s = s4();
    let ext = ext_set(&s.gt, &s.k, &s.k.table.trivial());
    let degrees: Vec<i64> = ext.members.iter().map(|&i| s.gt.irreducible(i).degree()).collect();
    assert_eq!(degrees, vec![1, 1]);
    let chi3 = degree3(&s.k);
    let ext = ext_set(&s.gt, &s.k, &chi3);
    let degrees: Vec<i64> = ext.members.iter().map(|&i| s.gt.irreducible(i).degree()).collect();
    assert_eq!(degrees, vec![3, 3]);
    for &i in &ext.members {
        assert_eq!(restrict(s.gt.irreducible(i), &s.gt, &s.k), chi3);
    }
}

#[test]
fn field_multiset_examples() {
    let s = s4();
    let h = SubTable::new(&s.g, s.g.product_set(&s.l.sub, &s.c).unwrap()).unwrap();
    assert_eq!(h.order(), 8);
    let chi3 = degree3(&s.k);
    let check = ext_field_multiset_check(&s.gt, &s.k, &s.l, &h, &s.c, &chi3).unwrap();
    assert!(check.passes());
    assert_eq!(check.upper, vec![FieldDescriptor::rationals(); 2]);
    let check = ext_field_multiset_check(&s.gt, &s.k, &s.l, &h, &s.c, &s.k.table.trivial()).unwrap();
    assert!(check.passes());

    // G = K (only the trivial group among solvable ones): H = LC = G
    let g = Group::from_generators(1, vec![]).unwrap();
    let gt = whole(&g);
    let check =
        ext_field_multiset_check(&gt, &gt, &gt, &gt, &g.whole(), &gt.table.trivial()).unwrap();
    assert!(check.passes());
    assert_eq!(check.upper.len(), 1);
}
