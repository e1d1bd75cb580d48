//! Randomized invariants of the exact kernels.

use proptest::prelude::*;

use vpoly::chain::{chains_equal, Chain};
use vpoly::measures::mixed_volume;
use vpoly::polytope::Polytope;
use vpoly::vector::{qvec, QVec};
use vpoly::winding::{winding_number, PLCycle};
use vpoly::Rat;

fn point_strategy() -> impl Strategy<Value = QVec> {
    (-5i64..=5, -5i64..=5).prop_map(|(x, y)| qvec(&[x, y]))
}

fn polytope_strategy() -> impl Strategy<Value = Polytope> {
    prop::collection::vec(point_strategy(), 1..6)
        .prop_filter_map("hull", |pts| Polytope::hull(&pts).ok())
}

fn cycle_strategy() -> impl Strategy<Value = PLCycle> {
    prop::collection::vec(point_strategy(), 3..7)
        .prop_filter_map("cycle", |pts| PLCycle::new(pts).ok())
        .prop_filter("nondegenerate", |c| !c.is_degenerate())
}

fn off_curve(gamma: &PLCycle, a: &QVec) -> bool {
    winding_number(gamma, a).is_ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn support_is_additive_and_homogeneous(
        a in polytope_strategy(),
        b in polytope_strategy(),
        (x, y) in (-4i64..=4, -4i64..=4),
        lam in 0i64..=3,
    ) {
        prop_assume!((x, y) != (0, 0));
        let xi = qvec(&[x, y]);
        let sum = a.minkowski_sum(&b).unwrap();
        prop_assert_eq!(
            sum.support_value(&xi).unwrap(),
            a.support_value(&xi).unwrap() + b.support_value(&xi).unwrap()
        );
        let lam_q = Rat::from_integer(lam.into());
        prop_assert_eq!(
            a.scale(&lam_q).support_value(&xi).unwrap(),
            lam_q * a.support_value(&xi).unwrap()
        );
    }

    #[test]
    fn hull_of_vertices_is_identity(a in polytope_strategy()) {
        prop_assert_eq!(Polytope::hull(a.vertices()).unwrap(), a);
    }

    #[test]
    fn minkowski_sum_commutes_and_associates(
        a in polytope_strategy(),
        b in polytope_strategy(),
        c in polytope_strategy(),
    ) {
        let ab = a.minkowski_sum(&b).unwrap();
        prop_assert_eq!(&ab, &b.minkowski_sum(&a).unwrap());
        prop_assert_eq!(
            ab.minkowski_sum(&c).unwrap(),
            a.minkowski_sum(&b.minkowski_sum(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn chain_product_commutes(a in polytope_strategy(), b in polytope_strategy()) {
        let ca = Chain::of_polytope(&a);
        let cb = Chain::of_polytope(&b);
        let v = chains_equal(&ca.product(&cb).unwrap(), &cb.product(&ca).unwrap()).unwrap();
        prop_assert!(v.equal && v.exact);
    }

    #[test]
    fn winding_number_negates_under_reversal_and_translates(
        gamma in cycle_strategy(),
        a in point_strategy(),
        t in point_strategy(),
    ) {
        prop_assume!(off_curve(&gamma, &a));
        let w = winding_number(&gamma, &a).unwrap();
        prop_assert_eq!(winding_number(&gamma.reversed(), &a).unwrap(), -w);
        prop_assert_eq!(winding_number(&gamma.translate(&t), &(&a + &t)).unwrap(), w);
    }

    #[test]
    fn mixed_volume_is_symmetric(a in polytope_strategy(), b in polytope_strategy()) {
        prop_assert_eq!(
            mixed_volume(&[a.clone(), b.clone()]).unwrap(),
            mixed_volume(&[b, a]).unwrap()
        );
    }
}
