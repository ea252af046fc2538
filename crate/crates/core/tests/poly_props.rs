mod common;

use common::{close, laplace_det, poly};
use lpm_core::families::random_connected_graph;
use lpm_core::rng::sample_rng;
use lpm_core::{BigRational, MultiAffinePoly, Permutation, SparsePoly};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dual_is_an_involution(p in poly(6)) {
        prop_assert_eq!(p.dual().dual(), p);
    }

    #[test]
    fn dual_evaluates_through_reciprocals(
        (p, v) in poly(6).prop_flat_map(|p| {
            let n = p.n();
            (Just(p), prop::collection::vec(prop_oneof![-2.0f64..-0.5, 0.5f64..2.0], n))
        })
    ) {
        let inv: Vec<f64> = v.iter().map(|x| 1.0 / x).collect();
        let lhs = p.dual().eval(&v).unwrap();
        let rhs = v.iter().product::<f64>() * p.eval(&inv).unwrap();
        prop_assert!(close(lhs, rhs, 1e-10), "{lhs} vs {rhs}");
    }

    #[test]
    fn line_restriction_degree_and_constant_term(
        (p, v, a) in poly(6).prop_flat_map(|p| {
            let n = p.n();
            (Just(p), prop::collection::vec(-2.0f64..2.0, n), prop::collection::vec(-2.0f64..2.0, n))
        })
    ) {
        let q = p.restrict_line(&v, &a).unwrap();
        prop_assert!(q.degree() <= p.degree());
        let at_zero = p.restrict_line(&v, &vec![0.0; p.n()]).unwrap();
        prop_assert!(at_zero.degree() == 0);
        prop_assert!(close(at_zero.eval(&0.0), p.eval(&v).unwrap(), 1e-12));
        prop_assert!(close(q.eval(&0.0), p.eval(&v).unwrap(), 1e-10));
    }

    #[test]
    fn permutations_act_as_a_group(
        (p, s, t) in poly(6).prop_flat_map(|p| {
            let n = p.n();
            (Just(p), perm(n), perm(n))
        })
    ) {
        let composed = p.apply_permutation(&t.compose(&s)).unwrap();
        let sequential = p.apply_permutation(&s).unwrap().apply_permutation(&t).unwrap();
        prop_assert_eq!(composed, sequential);
        prop_assert_eq!(p.apply_permutation(&Permutation::identity(p.n())).unwrap(), p);
    }

    #[test]
    fn tree_count_matches_laplacian_minor(seed in any::<u64>()) {
        let g = random_connected_graph(&mut sample_rng(seed, 0), None).unwrap();
        let m = g.vertex_count();
        let mut lap = vec![vec![0i64; m]; m];
        for &(u, v) in g.edges() {
            lap[u][u] += 1;
            lap[v][v] += 1;
            lap[u][v] -= 1;
            lap[v][u] -= 1;
        }
        let reduced: Vec<Vec<i64>> = lap[1..].iter().map(|r| r[1..].to_vec()).collect();
        let t: MultiAffinePoly<f64> = g.spanning_tree_poly().unwrap();
        prop_assert_eq!(t.eval(&vec![1.0; t.n()]).unwrap(), laplace_det(&reduced) as f64);
    }

    #[test]
    fn exact_arithmetic_is_a_ring_homomorphism(
        f in prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..5), 1..5),
        g in prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..5), 1..5),
        points in prop::collection::vec(prop::collection::vec((-20i64..20, 1i64..9), 3), 100),
    ) {
        let vars = ["u", "v", "w"];
        let build = |terms: &[(Vec<u32>, i64)]| {
            SparsePoly::from_terms(&vars, terms.iter().map(|(e, c)| (e.clone(), BigRational::from_integer((*c).into())))).unwrap()
        };
        let (f, g) = (build(&f), build(&g));
        let combo = f.mul(&g).unwrap().add(&f).unwrap().sub(&g.scale(&BigRational::from_integer(3.into()))).unwrap();
        let ff: SparsePoly<f64> = f.map(|c| lpm_core::Scalar::to_f64(c));
        let gf: SparsePoly<f64> = g.map(|c| lpm_core::Scalar::to_f64(c));
        for pt in points {
            let x: Vec<BigRational> = pt.iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect();
            let (fx, gx) = (f.eval(&x).unwrap(), g.eval(&x).unwrap());
            let expect = fx.clone() * gx.clone() + fx - gx * BigRational::from_integer(3.into());
            prop_assert_eq!(combo.eval(&x).unwrap(), expect.clone());
            let xf: Vec<f64> = x.iter().map(lpm_core::Scalar::to_f64).collect();
            let float = ff.mul(&gf).unwrap().add(&ff).unwrap().sub(&gf.scale(&3.0)).unwrap().eval(&xf).unwrap();
            prop_assert!(close(float, lpm_core::Scalar::to_f64(&expect), 1e-9));
        }
    }
}
