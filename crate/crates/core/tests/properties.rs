use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use knotsurgery_core::basicclass::{
    brute_force_enumerate, enumerate_basic_classes, moduli_dimension, taubes_verdict, Verdict, ZkBasis,
};
use knotsurgery_core::knot::{alexander_from_braid, alexander_from_seifert, BraidWord, KnotRecord, SeifertMatrix};
use knotsurgery_core::laurent::{LaurentPoly, Parity};
use knotsurgery_core::manifold::{build_zk, geography, knot_surgery, make_e2n, make_k3, sw_parity, Base};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(|terms| LaurentPoly::from_terms("t", terms))
}

fn symmetric_poly(parity: Parity) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((1i64..=5, -9i64..=9), 0..4).prop_flat_map(move |pairs| {
        let a0 = if parity == Parity::Plus { -9i64..=9 } else { 0i64..=0 };
        a0.prop_map(move |c| {
            let mut terms = vec![(0, c)];
            for &(n, a) in &pairs {
                terms.push((n, a));
                terms.push((-n, a * parity.as_i64()));
            }
            LaurentPoly::from_terms("t", terms)
        })
    })
}

/// Block sums of `[[a, c+1], [c, b]]`, each with `V - V^T` the standard
/// symplectic block.
fn seifert() -> impl Strategy<Value = SeifertMatrix> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -2i64..=2), 1..=3).prop_map(|blocks| {
        blocks
            .into_iter()
            .map(|(a, b, c)| SeifertMatrix::new(vec![vec![a, c + 1], vec![c, b]]).unwrap())
            .reduce(|x, y| x.block_sum(&y))
            .unwrap()
    })
}

fn knot_braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let letter = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
            (Just(n), prop::collection::vec(letter, 1..10))
        })
        .prop_filter_map("closure is a knot", |(n, w)| BraidWord::new(n, w).ok())
}

fn eval_int(p: &LaurentPoly, x: i64) -> BigRational {
    p.eval(&BigRational::from_integer(BigInt::from(x)))
}

fn trefoils(g: usize) -> KnotRecord {
    let t = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
    let v = (1..g).fold(t.clone(), |acc, _| acc.block_sum(&t));
    KnotRecord::from_seifert("trefoil sum", v, Some(g as u64)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        let one = LaurentPoly::one("t");
        prop_assert_eq!(p.checked_add(&q).unwrap(), q.checked_add(&p).unwrap());
        prop_assert_eq!(p.checked_mul(&q).unwrap(), q.checked_mul(&p).unwrap());
        prop_assert_eq!(
            p.checked_add(&q).unwrap().checked_add(&r).unwrap(),
            p.checked_add(&q.checked_add(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.checked_mul(&q).unwrap().checked_mul(&r).unwrap(),
            p.checked_mul(&q.checked_mul(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.checked_mul(&q.checked_add(&r).unwrap()).unwrap(),
            p.checked_mul(&q).unwrap().checked_add(&p.checked_mul(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(p.checked_mul(&one).unwrap(), p.clone());
        prop_assert!(p.checked_sub(&p).unwrap().is_zero());
    }
}

proptest! {
    #[test]
    fn symmetric_round_trip(p in symmetric_poly(Parity::Plus), q in symmetric_poly(Parity::Minus)) {
        prop_assert_eq!(p.to_symmetric(Parity::Plus).unwrap().expand("t"), p.clone());
        prop_assert_eq!(q.to_symmetric(Parity::Minus).unwrap().expand("t"), q.clone());
    }

    #[test]
    fn substitute_power_is_composition(p in poly(), m in 1i64..=4) {
        let s = p.substitute_power(m, "u").unwrap();
        for x in [-3i64, -2, 2, 3, 5] {
            prop_assert_eq!(eval_int(&s, x), eval_int(&p, x.pow(m as u32)));
        }
    }

    #[test]
    fn degree_and_top_multiply(p in symmetric_poly(Parity::Plus), q in symmetric_poly(Parity::Plus)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let (dp, tp) = p.degree_and_top().unwrap();
        let (dq, tq) = q.degree_and_top().unwrap();
        let (d, t) = p.checked_mul(&q).unwrap().degree_and_top().unwrap();
        prop_assert_eq!(d, dp + dq);
        prop_assert_eq!(t, tp * tq);
    }

    #[test]
    fn seifert_alexander_is_normalized(v in seifert()) {
        let a = alexander_from_seifert(&v).unwrap();
        prop_assert!(a.is_symmetric(Parity::Plus));
        prop_assert_eq!(a.eval_at_one(), BigInt::one());
        let (d, _) = a.degree_and_top().unwrap();
        prop_assert!(d <= v.surface_genus());
        prop_assert_eq!(alexander_from_seifert(&v.mirror()).unwrap(), a);
    }

    #[test]
    fn braid_alexander_is_normalized(b in knot_braid()) {
        let a = alexander_from_braid(&b).unwrap();
        prop_assert!(a.is_symmetric(Parity::Plus));
        prop_assert_eq!(a.eval_at_one(), BigInt::one());
    }

    #[test]
    fn surgery_preserves_numerics(v in seifert(), n in 1i64..=3) {
        let g = v.surface_genus();
        let k = KnotRecord::from_seifert("k", v, Some(g)).unwrap();
        for x in [make_k3(), make_e2n(n).unwrap()] {
            let xk = knot_surgery(&x, "T", &k).unwrap();
            prop_assert_eq!(
                (xk.euler, xk.signature, xk.b_plus, xk.spin, xk.simply_connected),
                (x.euler, x.signature, x.b_plus, x.spin, x.simply_connected)
            );
            prop_assert_eq!(xk.sw().unwrap().poly.eval_at_one(), x.sw().unwrap().poly.eval_at_one());
        }
    }
}

#[test]
fn fast_path_agrees_with_brute_force() {
    for g in 1..=5u64 {
        let basis = ZkBasis::new(g, 1).unwrap();
        let fast = enumerate_basic_classes(&basis, &BigInt::from(2)).unwrap();
        let mut fast: Vec<_> = fast.classes.into_iter().map(|c| c.class).collect();
        fast.sort();
        let brute = brute_force_enumerate(&basis, 2 * g as i64 + 4).unwrap();
        assert_eq!(fast, brute, "g = {g}");
    }
    for (g, n) in [(1u64, 2u64), (2, 2), (1, 3)] {
        let basis = ZkBasis::new(g, n).unwrap();
        let fast = enumerate_basic_classes(&basis, &BigInt::from(2)).unwrap();
        let fast: Vec<_> = fast.classes.into_iter().map(|c| c.class).collect();
        assert_eq!(fast, brute_force_enumerate(&basis, 2 * (g + n) as i64).unwrap(), "g = {g}, n = {n}");
    }
}

#[test]
fn basic_classes_negation_and_verdict() {
    for g in 1..=4usize {
        let k = trefoils(g);
        let built = build_zk(&k, Base::K3).unwrap();
        let basis = ZkBasis::from_manifold(&built.manifold).unwrap();
        let parity = sw_parity(&built.manifold).unwrap();
        for a_d in [-3i64, -1, 0, 1, 2, 7] {
            let r = enumerate_basic_classes(&basis, &BigInt::from(a_d)).unwrap();
            assert_eq!(r.count_up_to_sign, usize::from(a_d != 0));
            for c in &r.classes {
                let neg = r.classes.iter().find(|d| d.class == c.class.neg()).expect("closed under negation");
                assert_eq!(neg.sw, &c.sw * BigInt::from(parity.as_i64()));
                assert_eq!(c.class.square(&basis), basis.c);
                assert_eq!(moduli_dimension(&basis, &c.class).unwrap(), 0);
            }
            let v = taubes_verdict(&r, built.manifold.has_minus_two_sphere());
            let expected = match a_d.abs() {
                0 => Verdict::TrivialSw,
                1 => Verdict::Inconclusive,
                _ => Verdict::NonsymplecticBothOrientations,
            };
            assert_eq!(v, expected);
        }
    }
}

#[test]
fn geography_lattice_points() {
    for g in 1..=10usize {
        let k = trefoils(g);
        for n in 1..=4u64 {
            let z = build_zk(&k, Base::E2n(n)).unwrap().manifold;
            let p = geography(&z).unwrap();
            let (gi, ni) = (g as i64, n as i64);
            assert_eq!((p.chi, p.c), (3 * ni + gi - 1, 8 * (gi + ni - 1)));
            assert_eq!(p.c, 8 * (p.chi - 2 * ni));
            assert!(z.spin && z.signature % 16 == 0);
        }
    }
}
