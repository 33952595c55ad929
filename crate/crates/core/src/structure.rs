//! Series, nilpotency and solvability, Sylow and Frattini subgroups, subgroup
//! classes, and Carter subgroups.
//!
//! Everything here operates on a whole [`Group`]; work inside a subgroup goes
//! through [`Group::subgroup_as_group`] and [`Subgroup::lift`].

use std::collections::HashSet;

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::permgroup::{Group, Subgroup};

/// Default cap for [`all_subgroups`] and the brute-force oracles built on it.
pub const SUBGROUP_CAP: usize = 400;

/// Normal closure of `seeds` under conjugation by `conjugators`.
fn normal_closure_by(g: &Group, seeds: &[usize], conjugators: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = seeds.iter().copied().filter(|&x| x != 0).collect();
    gens.dedup();
    let mut current = g.closure(&gens);
    let mut i = 0;
    while i < gens.len() {
        for &c in conjugators {
            let y = g.conj(gens[i], c);
            if !current.contains(y) {
                gens.push(y);
                current = g.closure(&gens);
            }
        }
        i += 1;
    }
    current
}

/// `[A, B]`, computed as the normal closure in `⟨A, B⟩` of the commutators
/// of generators.
pub fn commutator_subgroup(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let seeds: Vec<usize> = a
        .generators()
        .iter()
        .flat_map(|&x| b.generators().iter().map(move |&y| (x, y)))
        .map(|(x, y)| g.commutator(x, y))
        .collect();
    let conjugators: Vec<usize> = a.generators().iter().chain(b.generators()).copied().collect();
    normal_closure_by(g, &seeds, &conjugators)
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    let whole = g.whole();
    commutator_subgroup(g, &whole, &whole)
}

/// Derived subgroup of a subgroup, in the parent's indices.
pub fn derived_subgroup_of(g: &Group, s: &Subgroup) -> Subgroup {
    commutator_subgroup(g, s, s)
}

/// `G = γ₁ ≥ γ₂ ≥ …`, ending at the first repeated term.
pub fn lower_central_series(g: &Group) -> Vec<Subgroup> {
    let whole = g.whole();
    let mut series = vec![whole.clone()];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap(), &whole);
        if &next == series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

/// `G ≥ G' ≥ G'' ≥ …`, ending at the first repeated term.
pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, last);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(g: &Group) -> bool {
    lower_central_series(g).last().unwrap().is_trivial()
}

pub fn is_solvable(g: &Group) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

pub fn is_subgroup_nilpotent(g: &Group, s: &Subgroup) -> bool {
    // γ_{i+1}(S) = [γ_i(S), S]
    let mut term = s.clone();
    loop {
        let next = commutator_subgroup(g, &term, s);
        if next == term {
            return term.is_trivial();
        }
        term = next;
    }
}

/// Smallest normal subgroup with nilpotent quotient: the stable term of the
/// lower central series.
pub fn nilpotent_residual(g: &Group) -> Subgroup {
    lower_central_series(g).pop().unwrap()
}

fn is_p_power(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// A Sylow `p`-subgroup, grown from the trivial group by repeatedly adjoining
/// the first `p`-element of the normalizer that lies outside.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Subgroup> {
    let order = g.order();
    let pu = p as usize;
    if !crate::arith::is_prime(p) || order % pu != 0 {
        return Err(Error::PrimeDoesNotDivide { p, order });
    }
    let mut sylow = g.trivial_subgroup();
    loop {
        let n = g.normalizer(&sylow);
        let next = n
            .elements()
            .iter()
            .copied()
            .find(|&x| !sylow.contains(x) && is_p_power(g.element_order(x), pu));
        match next {
            Some(x) => {
                let mut gens = sylow.generators().to_vec();
                gens.push(x);
                sylow = g.closure(&gens);
            }
            None => return Ok(sylow),
        }
    }
}

/// `Φ(P) = P' P^p` for a `p`-subgroup `P`.
pub fn frattini_of_p_group(g: &Group, p_sub: &Subgroup) -> Result<Subgroup> {
    let order = p_sub.order();
    if order == 1 {
        return Ok(g.trivial_subgroup());
    }
    let primes = factorize(order as u64);
    if primes.len() != 1 {
        return Err(Error::NotAPGroup(primes[0].0));
    }
    let p = primes[0].0 as i64;
    let mut seeds: Vec<usize> = p_sub.elements().iter().map(|&x| g.pow(x, p)).collect();
    for &x in p_sub.generators() {
        for &y in p_sub.generators() {
            seeds.push(g.commutator(x, y));
        }
    }
    seeds.sort_unstable();
    seeds.dedup();
    Ok(normal_closure_by(g, &seeds, p_sub.generators()))
}

/// All normal subgroups, ordered canonically.
pub fn normal_subgroups(g: &Group) -> Vec<Subgroup> {
    let mut found: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<Subgroup> = HashSet::new();
    for x in 0..g.order() {
        let n = normal_closure_by(g, &[x], g.generator_indices());
        if seen.insert(n.clone()) {
            found.push(n);
        }
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let joined = g.join(&found[i], &found[j]);
            if seen.insert(joined.clone()) {
                found.push(joined);
            }
        }
        i += 1;
    }
    found.sort();
    found
}

/// Minimal normal subgroups, ordered canonically.
pub fn minimal_normal_subgroups(g: &Group) -> Vec<Subgroup> {
    let mut closures: Vec<Subgroup> = Vec::new();
    for x in 1..g.order() {
        let n = normal_closure_by(g, &[x], g.generator_indices());
        if !closures.contains(&n) {
            closures.push(n);
        }
    }
    let mut minimal: Vec<Subgroup> = closures
        .iter()
        .filter(|n| !closures.iter().any(|m| m.order() < n.order() && m.is_subset_of(n)))
        .cloned()
        .collect();
    minimal.sort();
    minimal
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

/// Subgroups up to conjugacy; classes sorted by representative, and each
/// representative the smallest member in the canonical subgroup order.
#[derive(Clone, Debug)]
pub struct SubgroupClassList {
    pub classes: Vec<SubgroupClass>,
}

impl SubgroupClassList {
    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subgroup> {
        self.classes.iter().flat_map(|c| c.members.iter())
    }
}

/// Every subgroup, by the cyclic extension method: each class representative
/// `V` is extended by elements `x ∈ N(V) \ V` of prime order modulo `V`.
/// For non-solvable groups, where perfect subgroups escape that process,
/// every `x ∉ V` is tried instead.
pub fn all_subgroups(g: &Group) -> Result<SubgroupClassList> {
    all_subgroups_capped(g, SUBGROUP_CAP)
}

pub fn all_subgroups_capped(g: &Group, cap: usize) -> Result<SubgroupClassList> {
    if g.order() > cap {
        return Err(Error::SubgroupCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let solvable = is_solvable(g);
    let primes: Vec<i64> = factorize(g.order() as u64).iter().map(|&(p, _)| p as i64).collect();
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut add_class = |u: Subgroup, classes: &mut Vec<SubgroupClass>| -> bool {
        if seen.contains(&u) {
            return false;
        }
        let members = g.conjugates(&u);
        for m in &members {
            seen.insert(m.clone());
        }
        classes.push(SubgroupClass {
            representative: members[0].clone(),
            members,
        });
        true
    };
    add_class(g.trivial_subgroup(), &mut classes);
    let mut head = 0;
    while head < classes.len() {
        let v = classes[head].representative.clone();
        head += 1;
        let candidates: Vec<usize> = if solvable {
            g.normalizer(&v)
                .elements()
                .iter()
                .copied()
                .filter(|&x| !v.contains(x) && primes.iter().any(|&p| v.contains(g.pow(x, p))))
                .collect()
        } else {
            (0..g.order()).filter(|&x| !v.contains(x)).collect()
        };
        let mut tried: HashSet<Subgroup> = HashSet::new();
        for x in candidates {
            let mut gens = v.generators().to_vec();
            gens.push(x);
            let u = g.closure(&gens);
            if tried.insert(u.clone()) {
                add_class(u, &mut classes);
            }
        }
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(SubgroupClassList { classes })
}

/// Complements of a normal subgroup, by exhaustive subgroup enumeration.
pub fn complements(g: &Group, n: &Subgroup) -> Result<Vec<Subgroup>> {
    let target = g.order() / n.order();
    let all = all_subgroups(g)?;
    Ok(all
        .iter()
        .filter(|h| h.order() == target && g.intersection(h, n).is_trivial())
        .cloned()
        .collect())
}

/// A complement to the normal subgroup `n`, searched among the subgroups
/// generated by lifts `x_i n_i` of a generating set of `G/N`. Every
/// complement arises this way, so `None` means no complement exists.
pub fn find_complement(g: &Group, n: &Subgroup) -> Result<Option<Subgroup>> {
    let q = g.quotient(n)?;
    let qgens = q
        .group
        .subgroup_from_elements((0..q.group.order()).collect())
        .generators()
        .to_vec();
    let lifts: Vec<usize> = qgens
        .iter()
        .map(|&y| (0..g.order()).find(|&x| q.image[x] == y).unwrap())
        .collect();
    let target = g.order() / n.order();

    fn search(
        g: &Group,
        n: &Subgroup,
        lifts: &[usize],
        chosen: &mut Vec<usize>,
        target: usize,
    ) -> Option<Subgroup> {
        let h = g.closure(chosen);
        if h.elements().iter().any(|&x| x != 0 && n.contains(x)) {
            return None;
        }
        if chosen.len() == lifts.len() {
            return (h.order() == target).then_some(h);
        }
        let x = lifts[chosen.len()];
        for &m in n.elements() {
            chosen.push(g.mul(x, m));
            if let Some(found) = search(g, n, lifts, chosen, target) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    Ok(search(g, n, &lifts, &mut Vec::new(), target))
}

/// A Carter subgroup (self-normalizing nilpotent subgroup) of a solvable
/// group.
///
/// Recursion: pass to `G/N` for the smallest minimal normal subgroup `N` and
/// pull the answer back to `T`; if `T < G` recurse into `T`, otherwise `G/N`
/// is nilpotent, `N` is the abelian nilpotent residual, and a complement of
/// `N` is returned.
pub fn carter_subgroup(g: &Group) -> Result<Subgroup> {
    if !is_solvable(g) {
        return Err(Error::NotSolvable);
    }
    let c = carter_rec(g)?;
    if !is_subgroup_nilpotent(g, &c) || g.normalizer(&c) != c {
        return Err(Error::TheoremViolation(
            "computed Carter subgroup is not nilpotent and self-normalizing".into(),
        ));
    }
    Ok(c)
}

fn carter_rec(g: &Group) -> Result<Subgroup> {
    if is_nilpotent(g) {
        return Ok(g.whole());
    }
    let n = minimal_normal_subgroups(g)
        .into_iter()
        .min_by(|a, b| a.elements().cmp(b.elements()))
        .expect("a nontrivial group has a minimal normal subgroup");
    let q = g.quotient(&n)?;
    let c_bar = carter_rec(&q.group)?;
    let t = g.preimage(&q, &c_bar);
    if t.order() < g.order() {
        let tg = g.subgroup_as_group(&t);
        return Ok(t.lift(&carter_rec(&tg)?));
    }
    find_complement(g, &n)?.ok_or_else(|| {
        Error::TheoremViolation("nilpotent residual is abelian but has no complement".into())
    })
}

/// All self-normalizing nilpotent subgroups, by exhaustive enumeration.
pub fn carter_brute_force(g: &Group) -> Result<Vec<Subgroup>> {
    let all = all_subgroups(g)?;
    let mut out: Vec<Subgroup> = all
        .iter()
        .filter(|h| g.normalizer(h) == **h && is_subgroup_nilpotent(g, h))
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}

/// Checks that the brute-force Carter subgroups form one conjugacy class
/// containing `carter`.
pub fn carter_oracle_agrees(g: &Group, carter: &Subgroup) -> Result<bool> {
    let brute = carter_brute_force(g)?;
    Ok(!brute.is_empty() && g.conjugates(&brute[0]) == brute && brute.contains(carter))
}

/// When the nilpotent residual `K` is abelian, compares the complements of
/// `K` with the brute-force Carter subgroups. `None` if `K` is not abelian.
pub fn complements_are_carter(g: &Group) -> Result<Option<bool>> {
    let k = nilpotent_residual(g);
    let kg = g.subgroup_as_group(&k);
    if !kg.is_abelian() {
        return Ok(None);
    }
    let mut comps = complements(g, &k)?;
    comps.sort();
    let brute = carter_brute_force(g)?;
    Ok(Some(!comps.is_empty() && comps == brute))
}

/// Whether `CN/N` is a Carter subgroup of `G/N`.
pub fn carter_image_is_carter(g: &Group, carter: &Subgroup, n: &Subgroup) -> Result<bool> {
    let q = g.quotient(n)?;
    let image: Vec<usize> = carter.elements().iter().map(|&x| q.image[x]).collect();
    let c_bar = q.group.subgroup_from_elements(image);
    Ok(is_subgroup_nilpotent(&q.group, &c_bar) && q.group.normalizer(&c_bar) == c_bar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    fn cyc(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    fn group(n: usize, gens: &[&[&[u32]]]) -> Group {
        Group::from_generators(n, gens.iter().map(|c| cyc(n, c)).collect()).unwrap()
    }

    fn s3() -> Group {
        group(3, &[&[&[0, 1, 2]], &[&[0, 1]]])
    }

    fn s4() -> Group {
        group(4, &[&[&[0, 1, 2, 3]], &[&[0, 1]]])
    }

    fn d8() -> Group {
        group(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]])
    }

    fn f21() -> Group {
        Group::from_generators(
            7,
            vec![
                Permutation::from_images(vec![1, 2, 3, 4, 5, 6, 0]).unwrap(),
                Permutation::from_images(vec![0, 2, 4, 6, 1, 3, 5]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn derived_series_of_s4() {
        let g = s4();
        assert_eq!(derived_subgroup(&g).order(), 12);
        let orders: Vec<usize> = derived_series(&g).iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
    }

    #[test]
    fn lower_central_series_of_d8_reaches_one() {
        let orders: Vec<usize> = lower_central_series(&d8()).iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![8, 2, 1]);
    }

    #[test]
    fn nilpotency_and_solvability() {
        assert!(is_solvable(&s4()) && !is_nilpotent(&s4()));
        assert!(is_nilpotent(&d8()));
        let a5 = group(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]]);
        assert!(!is_solvable(&a5));
        assert!(matches!(carter_subgroup(&a5), Err(Error::NotSolvable)));
    }

    #[test]
    fn nilpotent_residuals() {
        assert_eq!(nilpotent_residual(&s4()).order(), 12);
        assert_eq!(nilpotent_residual(&s3()).order(), 3);
        assert!(nilpotent_residual(&d8()).is_trivial());
    }

    #[test]
    fn residual_is_smallest_among_normal_subgroups() {
        for g in [s3(), s4(), f21()] {
            let k = nilpotent_residual(&g);
            for n in normal_subgroups(&g) {
                let nilpotent_quotient = is_nilpotent(&g.quotient(&n).unwrap().group);
                assert_eq!(nilpotent_quotient, k.is_subset_of(&n));
            }
        }
    }

    #[test]
    fn sylow_and_frattini() {
        let g = s4();
        let p = sylow_subgroup(&g, 2).unwrap();
        assert_eq!(p.order(), 8);
        assert_eq!(sylow_subgroup(&g, 3).unwrap().order(), 3);
        assert!(matches!(sylow_subgroup(&g, 5), Err(Error::PrimeDoesNotDivide { .. })));

        let d = d8();
        let phi = frattini_of_p_group(&d, &d.whole()).unwrap();
        assert_eq!(phi.order(), 2);
        assert_eq!(d.order() / phi.order(), 4);

        let v4 = group(4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        assert!(frattini_of_p_group(&v4, &v4.whole()).unwrap().is_trivial());
        assert!(frattini_of_p_group(&g, &g.whole()).is_err());
    }

    #[test]
    fn subgroup_counts() {
        let s = all_subgroups(&s3()).unwrap();
        assert_eq!((s.classes.len(), s.subgroup_count()), (4, 6));
        let v4 = group(4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        assert_eq!(all_subgroups(&v4).unwrap().subgroup_count(), 5);
        let s = all_subgroups(&s4()).unwrap();
        assert_eq!((s.classes.len(), s.subgroup_count()), (11, 30));
        let a5 = group(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]]);
        let s = all_subgroups(&a5).unwrap();
        assert_eq!((s.classes.len(), s.subgroup_count()), (9, 59));
    }

    #[test]
    fn subgroup_cap() {
        let long: Vec<u32> = (0..6).collect();
        let s6 = group(6, &[&[&long], &[&[0, 1]]]);
        assert!(matches!(all_subgroups(&s6), Err(Error::SubgroupCapExceeded { .. })));
    }

    #[test]
    fn carter_subgroups() {
        let g = s4();
        let c = carter_subgroup(&g).unwrap();
        assert_eq!(c.order(), 8);
        assert_eq!(carter_brute_force(&g).unwrap().len(), 3);
        assert!(carter_oracle_agrees(&g, &c).unwrap());

        let g = f21();
        assert_eq!(carter_subgroup(&g).unwrap().order(), 3);

        let g = s3();
        let brute = carter_brute_force(&g).unwrap();
        assert_eq!(brute.len(), 3);
        assert!(brute.iter().all(|c| c.order() == 2));

        let c6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert_eq!(carter_subgroup(&c6).unwrap(), c6.whole());
        assert_eq!(carter_brute_force(&c6).unwrap(), vec![c6.whole()]);
    }

    #[test]
    fn complements_of_abelian_residual() {
        for g in [s3(), f21(), group(4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]])] {
            assert_eq!(complements_are_carter(&g).unwrap(), Some(true));
        }
        assert_eq!(complements_are_carter(&s4()).unwrap(), None);
    }
}
