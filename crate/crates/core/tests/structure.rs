use headchar::corpus::{builtin, builtin_catalog};
use headchar::permgroup::Group;
use headchar::structure::*;

fn catalog(name: &str) -> Group {
    builtin(name).unwrap().build().unwrap()
}

#[test]
fn catalog_expectations_hold() {
    for spec in builtin_catalog() {
        let g = spec.build().unwrap();
        let e = spec.expected.clone().unwrap_or_default();
        if let Some(o) = e.order {
            assert_eq!(g.order(), o, "{}", spec.name);
        }
        if let Some(c) = e.carter_order {
            assert_eq!(carter_subgroup(&g).unwrap().order(), c, "{}", spec.name);
        }
    }
}

#[test]
fn nilpotent_residual_is_the_smallest_normal_subgroup_with_nilpotent_quotient() {
    for spec in builtin_catalog() {
        let g = spec.build().unwrap();
        if g.order() > 200 {
            continue;
        }
        let k = nilpotent_residual(&g);
        for n in normal_subgroups(&g) {
            let q = g.quotient(&n).unwrap();
            assert_eq!(is_nilpotent(&q.group), k.is_subset_of(&n), "{}", spec.name);
        }
    }
}

#[test]
fn sylow_subgroups_have_full_prime_power_order() {
    for spec in builtin_catalog() {
        let g = spec.build().unwrap();
        for (p, e) in headchar::arith::factorize(g.order() as u64) {
            let s = sylow_subgroup(&g, p).unwrap();
            assert_eq!(s.order() as u64, p.pow(e), "{}", spec.name);
        }
    }
}

#[test]
fn frattini_quotients() {
    // |P/Φ(P)| = p^d with d the minimal number of generators
    for (name, p, expected) in [("D8", 2, 4), ("Q8", 2, 4), ("C8", 2, 2), ("C2^3", 2, 8), ("He3", 3, 9), ("SD16", 2, 4)] {
        let g = catalog(name);
        let s = sylow_subgroup(&g, p).unwrap();
        let phi = frattini_of_p_group(&g, &s).unwrap();
        assert_eq!(s.order() / phi.order(), expected, "{name}");
    }
}

#[test]
fn carter_image_in_quotients() {
    for name in ["S4", "GL2_3", "S3xS3", "AGL1_9"] {
        let g = catalog(name);
        let c = carter_subgroup(&g).unwrap();
        for n in normal_subgroups(&g) {
            assert!(carter_image_is_carter(&g, &c, &n).unwrap(), "{name}");
        }
    }
}

#[test]
fn minimal_normal_subgroups_are_minimal() {
    for name in ["S4", "A4", "GL2_3", "S3xS3", "D8"] {
        let g = catalog(name);
        let normals = normal_subgroups(&g);
        for m in minimal_normal_subgroups(&g) {
            assert!(!m.is_trivial());
            assert!(g.is_normal(&m));
            assert!(!normals.iter().any(|n| !n.is_trivial() && n.order() < m.order() && n.is_subset_of(&m)));
        }
    }
}

#[test]
fn derived_length_of_catalog_groups() {
    for (name, len) in [("S4", 4), ("GL2_3", 5), ("S3", 3), ("C6", 2), ("SL2_3", 4)] {
        assert_eq!(derived_series(&catalog(name)).len(), len, "{name}");
    }
    assert!(!is_solvable(&catalog("A5")));
}
