use headchar::arith::units;
use headchar::chartable::{character_table, conjugacy_classes, dual_group_table, ClassFunction};
use headchar::corpus::{builtin, builtin_catalog};
use headchar::permgroup::Group;

fn catalog(name: &str) -> Group {
    builtin(name).unwrap().build().unwrap()
}

#[test]
fn degrees_and_class_sizes_across_the_catalog() {
    for spec in builtin_catalog() {
        let g = spec.build().unwrap();
        let t = character_table(&g).unwrap();
        let degrees = t.degrees();
        assert_eq!(degrees.iter().map(|d| d * d).sum::<i64>(), g.order() as i64, "{}", spec.name);
        assert!(degrees.iter().all(|d| g.order() as i64 % d == 0));
        assert_eq!(t.classes.iter().map(|c| c.size).sum::<usize>(), g.order());
        assert!(t.classes.iter().all(|c| g.order() % c.size == 0));
        for (i, c) in t.classes.iter().enumerate() {
            assert_eq!(t.classes[c.inverse_class].inverse_class, i);
            for &(q, target) in &c.power_map {
                let x = g.pow(c.representative, q as i64);
                assert!(t.classes[target].members.binary_search(&x).is_ok());
            }
        }
    }
}

#[test]
fn tables_are_closed_under_galois_action() {
    for name in ["F21", "SL2_3", "GL2_3", "C3:C8", "AGL1_8", "He3"] {
        let g = catalog(name);
        let t = character_table(&g).unwrap();
        for k in units(t.exponent as u64) {
            for chi in &t.irreducibles {
                assert!(t.position(&chi.galois(k as i64).unwrap()).is_some(), "{name}");
            }
        }
    }
}

#[test]
fn abelian_tables_match_the_dual_group() {
    for spec in builtin_catalog() {
        let g = spec.build().unwrap();
        if g.is_abelian() {
            assert_eq!(character_table(&g).unwrap().irreducibles, dual_group_table(&g).irreducibles, "{}", spec.name);
            assert_eq!(conjugacy_classes(&g).len(), g.order());
        }
    }
}

#[test]
fn rational_classes_of_s4() {
    let g = catalog("S4");
    let t = character_table(&g).unwrap();
    for (i, c) in t.classes.iter().enumerate() {
        let conj_to_powers = units(c.element_order as u64)
            .into_iter()
            .all(|k| t.class_of[g.pow(c.representative, k as i64)] == i);
        let rational_column = t.irreducibles.iter().all(|chi| chi.values[i].is_rational());
        assert!(conj_to_powers && rational_column);
    }
    // and a group with an irrational class
    let g = catalog("C3");
    let t = character_table(&g).unwrap();
    let x = t.classes[1].representative;
    assert_ne!(t.class_of[g.pow(x, 2)], 1);
    assert!(!t.irreducibles.iter().all(|chi| chi.values[1].is_rational()));
}

#[test]
fn quaternion_table() {
    let t = character_table(&catalog("Q8")).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
    assert!(t.irreducibles.iter().all(ClassFunction::is_rational));
}

#[test]
fn class_counts() {
    for (name, k) in [("S3", 3), ("S4", 5), ("A4", 4), ("SL2_3", 7), ("GL2_3", 8), ("A5", 5), ("D8", 5)] {
        assert_eq!(conjugacy_classes(&catalog(name)).len(), k, "{name}");
    }
}

#[test]
fn rendering_is_stable() {
    let g = catalog("SL2_3");
    let a = character_table(&g).unwrap();
    let b = character_table(&g).unwrap();
    assert_eq!(a.render_text(&g), b.render_text(&g));
    assert_eq!(
        serde_json::to_string(&a.to_json(&g)).unwrap(),
        serde_json::to_string(&b.to_json(&g)).unwrap()
    );
    // values parse back to the same numbers
    for chi in &a.irreducibles {
        for (text, v) in chi.render().iter().zip(&chi.values) {
            assert_eq!(&text.parse::<headchar::CycNumber>().unwrap(), v);
        }
    }
}
