//! Characters of an abelian group as homomorphisms into the `e`-th roots of
//! unity, built one generator at a time. Independent of the Dixon code.

use crate::permgroup::Group;

/// Every character of an abelian group, as exponents `a` (value `ζ_e^a`,
/// `e` the group exponent) indexed by element.
pub fn dual_group_exponents(a: &Group) -> Vec<Vec<u32>> {
    assert!(a.is_abelian(), "dual group of a non-abelian group");
    let n = a.order();
    let e = a.exponent() as u64;
    let mut in_sub = vec![false; n];
    in_sub[0] = true;
    let mut members = vec![0usize];
    let mut chars: Vec<Vec<u32>> = vec![vec![0; n]];
    for &gen in a.generator_indices() {
        if in_sub[gen] {
            continue;
        }
        let mut step = 1u64;
        let mut y = gen;
        while !in_sub[y] {
            y = a.mul(y, gen);
            step += 1;
        }
        let mut layers = vec![members.clone()];
        for t in 1..step as usize {
            let layer: Vec<usize> = layers[t - 1].iter().map(|&x| a.mul(x, gen)).collect();
            layers.push(layer);
        }
        let mut next_chars = Vec::new();
        for chi in &chars {
            let target = chi[y] as u64;
            for b in (0..e).filter(|&b| step * b % e == target) {
                let mut ext = chi.clone();
                for (t, layer) in layers.iter().enumerate().skip(1) {
                    for (&x, &base) in layer.iter().zip(&members) {
                        ext[x] = ((chi[base] as u64 + t as u64 * b) % e) as u32;
                    }
                }
                next_chars.push(ext);
            }
        }
        chars = next_chars;
        for layer in layers.into_iter().skip(1) {
            for x in layer {
                in_sub[x] = true;
                members.push(x);
            }
        }
    }
    chars
}
