use headchar::{CycNumber, FieldDescriptor, Rational, SmallCycNumber};
use num_traits::ToPrimitive;
use proptest::prelude::*;

const LEVELS: &[u32] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 24, 30];

fn cyc() -> impl Strategy<Value = CycNumber> {
    (
        prop::sample::select(LEVELS),
        prop::collection::vec((0i64..60, -3i64..=3), 0..5),
    )
        .prop_map(|(n, terms)| {
            CycNumber::from_exponent_sum(n, terms.into_iter().map(|(k, c)| (k, Rational::from_integer(c.into()))))
        })
}

/// Floating-point evaluation, used only as an independent oracle.
fn eval(x: &CycNumber) -> (f64, f64) {
    let n = x.level() as f64;
    x.terms().fold((0.0, 0.0), |(re, im), (e, c)| {
        let t = std::f64::consts::TAU * e as f64 / n;
        let c = c.to_f64().unwrap();
        (re + c * t.cos(), im + c * t.sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
}

proptest! {
    #[test]
    fn ring_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn arithmetic_matches_numeric_evaluation(a in cyc(), b in cyc()) {
        let (ar, ai) = eval(&a);
        let (br, bi) = eval(&b);
        prop_assert!(close(eval(&(&a + &b)), (ar + br, ai + bi)));
        prop_assert!(close(eval(&(&a * &b)), (ar * br - ai * bi, ar * bi + ai * br)));
        prop_assert!(close(eval(&a.conj()), (ar, -ai)));
    }

    #[test]
    fn canonical_form_is_stable(a in cyc()) {
        // Re-entering the value through any multiple of its level lands on
        // the identical representation.
        let n = a.level();
        for m in [1u32, 2, 3, 4] {
            let big = n * m;
            let again = CycNumber::from_exponent_sum(
                big,
                a.terms().map(|(e, c)| (e as i64 * m as i64, c.clone())),
            );
            prop_assert_eq!(&again, &a);
        }
        prop_assert_eq!(a.to_string().parse::<CycNumber>().unwrap(), a);
    }

    #[test]
    fn galois_is_a_ring_automorphism(
        a in cyc(),
        b in cyc(),
        k in prop::sample::select(headchar::arith::units(5040)),
        l in prop::sample::select(headchar::arith::units(5040)),
    ) {
        // 5040 is a multiple of every level used above
        let (n, k, l) = (5040i64, k as i64, l as i64);
        prop_assert_eq!((&a + &b).galois(k).unwrap(), &a.galois(k).unwrap() + &b.galois(k).unwrap());
        prop_assert_eq!((&a * &b).galois(k).unwrap(), &a.galois(k).unwrap() * &b.galois(k).unwrap());
        prop_assert_eq!(a.galois(1).unwrap(), a.clone());
        prop_assert_eq!(a.galois(k).unwrap().galois(l).unwrap(), a.galois(k * l % n).unwrap());
    }

    #[test]
    fn nonzero_values_invert(a in cyc()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), CycNumber::one());
    }

    #[test]
    fn orbit_polynomial_has_rational_coefficients(a in cyc()) {
        let d = FieldDescriptor::of([&a]);
        // one Galois conjugate per coset of the stabilizer
        let mut reps: Vec<CycNumber> = Vec::new();
        for k in headchar::arith::units(d.conductor as u64) {
            let img = a.galois(k as i64).unwrap();
            if !reps.contains(&img) {
                reps.push(img);
            }
        }
        prop_assert_eq!(reps.len() as u64, d.degree());
        let mut poly = vec![CycNumber::one()];
        for r in &reps {
            let mut next = vec![CycNumber::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - &(c * r);
            }
            poly = next;
        }
        prop_assert!(poly.iter().all(|c| c.is_rational()));
    }
}

#[test]
fn primitive_roots_generate_their_cyclotomic_field() {
    for n in 1u32..=40 {
        if n % 4 == 2 {
            continue;
        }
        let d = FieldDescriptor::of([&CycNumber::root_of_unity(n, 1)]);
        assert_eq!(d.conductor, n);
        assert!(d.is_cyclotomic(), "n = {n}");
    }
}

#[test]
fn small_rational_coefficients_agree_with_big_ones() {
    let a = SmallCycNumber::root_of_unity(12, 5);
    let b = SmallCycNumber::root_of_unity(8, 3);
    let big = &CycNumber::root_of_unity(12, 5) * &CycNumber::root_of_unity(8, 3);
    assert_eq!((&a * &b).to_string(), big.to_string());
}
