mod common;

use common::{curve_point, heron_params, nonzero_rational};
use heron_curves::weierstrass::MAZUR_BOUND;
use heron_curves::EcPoint;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(params in heron_params(6), ks in prop::array::uniform3(1i64..3), ts in prop::array::uniform3(any::<bool>())) {
        let e = params.curve();
        let [p, q, r] = [0, 1, 2].map(|i| curve_point(&params, ks[i], ts[i]));
        prop_assert_eq!(e.add(&e.add(&p, &q)?, &r)?, e.add(&p, &e.add(&q, &r)?)?);
        prop_assert_eq!(e.add(&p, &q)?, e.add(&q, &p)?);
        prop_assert_eq!(e.add(&p, &EcPoint::Infinity)?, p.clone());
        prop_assert_eq!(e.add(&p, &p.negate())?, EcPoint::Infinity);
    }

    #[test]
    fn scalar_mul_matches_repeated_addition(params in heron_params(5), k in 1i64..=16) {
        let e = params.curve();
        let p = curve_point(&params, 1, false);
        let mut acc = EcPoint::Infinity;
        for _ in 0..k {
            acc = e.add(&acc, &p)?;
        }
        prop_assert_eq!(e.scalar_mul(k, &p)?, acc);
    }

    #[test]
    fn two_torsion_roots(params in heron_params(10)) {
        let e = params.curve();
        for t in e.two_torsion()? {
            prop_assert!(e.rhs(t.x().unwrap()).is_zero());
            prop_assert_eq!(e.double(&t)?, EcPoint::Infinity);
        }
    }

    #[test]
    fn torsion_orders_respect_mazur(params in heron_params(8), k in 1i64..4, t in any::<bool>()) {
        let e = params.curve();
        if let Some(n) = e.torsion_order(&curve_point(&params, k, t))? {
            prop_assert!((1..=MAZUR_BOUND).contains(&n) && n != 11);
        }
    }

    #[test]
    fn scaling_is_detected(params in heron_params(6), lambda in nonzero_rational(6)) {
        let e = params.curve();
        let scaled = e.scaled(&lambda);
        let found = e.isomorphism_to(&scaled)?.expect("isomorphic");
        prop_assert_eq!(e.a() * found.pow(4), scaled.a().clone());
        prop_assert_eq!(e.b() * found.pow(6), scaled.b().clone());
    }
}
