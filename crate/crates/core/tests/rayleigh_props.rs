use lpm_core::rayleigh::{build_p, vanish, w};
use lpm_core::{BigRational, Graph, MultiAffinePoly};
use proptest::prelude::*;

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

#[test]
fn w_vanishes_on_the_three_ideals() {
    let w = w();
    for names in [&["a", "b", "c"][..], &["a", "c", "x2"], &["b", "c", "x2"]] {
        assert!(vanish(&w, names).unwrap().is_zero(), "{names:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn diagonal_restriction_is_the_k4_tree_polynomial(
        pts in prop::collection::vec((-9i64..9, 1i64..5), 3)
    ) {
        let x: Vec<BigRational> = pts.iter().map(|&(a, b)| q(a, b)).collect();
        let mut point = x.clone();
        point.extend([q(0, 1), q(0, 1), q(0, 1)]);
        let bordered = build_p().eval(&point).unwrap();
        // Edge 12 carries x1, edge 34 carries x3, the other four carry x2.
        let k4 = Graph::complete(4);
        let t: MultiAffinePoly<BigRational> = k4.spanning_tree_poly().unwrap();
        let edge_values: Vec<BigRational> = k4
            .edges()
            .iter()
            .map(|&(u, v)| match (u.min(v), u.max(v)) {
                (0, 1) => x[0].clone(),
                (2, 3) => x[2].clone(),
                _ => x[1].clone(),
            })
            .collect();
        prop_assert_eq!(bordered, t.eval(&edge_values).unwrap());
    }
}
