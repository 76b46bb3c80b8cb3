use definetti_core::geometry::{convex_hull_2d, fk_image, hull_contains, striations_data};
use definetti_core::numeric::{int, rat};
use definetti_core::partitions::{enumerate_partitions, Partition};
use definetti_core::werner::{
    definetti_bound_werner, distance_to_products_k2, distance_to_twirled, partial_trace_coeffs, scaled_partition,
    trace_distance, twirled_product,
};
use definetti_core::{Rational, Spectrum, WernerState};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn p(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

#[test]
fn werner_json_roundtrip() {
    for lambda in enumerate_partitions(7, 3) {
        let w = partial_trace_coeffs(&lambda, 7, 3, 3).unwrap();
        assert_eq!(WernerState::from_json(&w.to_json()).unwrap(), w);
    }
    assert!(WernerState::from_json(r#"{"k":2,"d":2,"weights":[{"partition":[2],"num":"1","den":"2"}]}"#).is_err());
}

#[test]
fn reduced_states_approach_their_twirl() {
    // Along λ = nλ̄ the k-marginal approaches f^k(λ̄).
    let bar = Spectrum::new(vec![rat(1, 2), rat(1, 3), rat(1, 6)]).unwrap();
    let mut last = Rational::one();
    for n in [12, 24, 48, 96] {
        let lambda = scaled_partition(&bar, n).unwrap();
        let v = distance_to_twirled(&lambda, n, 3, &bar).unwrap();
        assert!(v < last);
        last = v.clone();
        let report = definetti_bound_werner(&lambda, n, 3, 3).unwrap();
        assert_eq!(report.exact_distance, v);
    }
}

#[test]
fn k2_marginals_inside_product_hull_for_symmetric_diagrams() {
    for n in 2..=12 {
        let w = partial_trace_coeffs(&Partition::row_shape(n), n, 2, 3).unwrap();
        assert!(distance_to_products_k2(&w).unwrap().is_zero());
    }
    let anti = partial_trace_coeffs(&p(&[1, 1, 1]), 3, 2, 3).unwrap();
    assert_eq!(distance_to_products_k2(&anti).unwrap(), rat(2, 3));
}

#[test]
fn some_k3_d3_striation_points_lie_in_the_vertex_triangle() {
    let coords = (p(&[1, 1, 1]), p(&[2, 1]));
    let hull = convex_hull_2d(&fk_image(3, 3, 6, coords.clone()).unwrap().coordinates());
    let cloud = striations_data(12, 3, 3, coords).unwrap();
    let inside = cloud
        .points
        .iter()
        .filter(|q| hull_contains(&hull, &(q.x.clone(), q.y.clone())))
        .count();
    assert!(inside > 0);
}

fn spectrum_strategy(d: usize) -> impl Strategy<Value = Spectrum> {
    proptest::collection::vec(0i64..30, d).prop_map(move |raw| {
        let total: i64 = raw.iter().sum();
        if total == 0 {
            Spectrum::vertex(1, d)
        } else {
            Spectrum::new(raw.iter().map(|&v| rat(v, total)).collect()).unwrap()
        }
    })
}

proptest! {
    #[test]
    fn twirled_product_is_a_state(r in spectrum_strategy(3), k in 0usize..6) {
        let w = twirled_product(&r, k, 3).unwrap();
        let total: Rational = w.values().cloned().sum();
        prop_assert!(total.is_one());
        prop_assert!(w.values().all(|v| *v >= int(0)));
    }

    #[test]
    fn trace_distance_is_a_metric(a in spectrum_strategy(3), b in spectrum_strategy(3), c in spectrum_strategy(3), k in 1usize..5) {
        let (wa, wb, wc) = (
            twirled_product(&a, k, 3).unwrap(),
            twirled_product(&b, k, 3).unwrap(),
            twirled_product(&c, k, 3).unwrap(),
        );
        let ab = trace_distance(&wa, &wb).unwrap();
        prop_assert_eq!(&ab, &trace_distance(&wb, &wa).unwrap());
        prop_assert!(ab <= int(1));
        prop_assert!(ab <= trace_distance(&wa, &wc).unwrap() + trace_distance(&wc, &wb).unwrap());
        prop_assert!(trace_distance(&wa, &wa).unwrap().is_zero());
    }

    #[test]
    fn marginals_commute_with_tracing(pick in 0usize..200, k in 0usize..=9) {
        let all = enumerate_partitions(9, 3);
        let lambda = &all[pick % all.len()];
        let w = partial_trace_coeffs(lambda, 9, k, 3).unwrap();
        for j in 0..=k {
            prop_assert_eq!(w.trace_down(j).unwrap(), partial_trace_coeffs(lambda, 9, j, 3).unwrap());
        }
    }
}
