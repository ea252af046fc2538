mod common;

use lpm_core::cones::{
    in_cone_matrix, in_cone_vector, is_stable_probabilistic, sample_in_cone_matrix, Verdict, CONE_TOL, TOL_IMAG,
};
use lpm_core::families::{Family, FamilySpec};
use lpm_core::minorlift::matrix_pencil_poly;
use lpm_core::roots::real_roots;
use lpm_core::rng::{positive_vec, sample_rng};
use lpm_core::{Graph, MultiAffinePoly, SymMatrix};
use proptest::prelude::*;
use rand::Rng;

fn stable_poly(seed: u64) -> MultiAffinePoly<f64> {
    let f = Family::GENERATORS[(seed % 5) as usize];
    FamilySpec::new(f).with_max_n(5).sample(&mut sample_rng(seed, 0)).unwrap().poly
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pencil_roots_shift_with_the_matrix(seed in any::<u64>(), s in -3.0f64..3.0) {
        let p = stable_poly(seed);
        let a = SymMatrix::random_with(p.n(), &mut sample_rng(seed, 1));
        let base = real_roots(&matrix_pencil_poly(&p, &a).unwrap(), TOL_IMAG).unwrap();
        let shifted = real_roots(&matrix_pencil_poly(&p, &a.shift(&s)).unwrap(), TOL_IMAG).unwrap();
        prop_assert_eq!(base.len(), shifted.len());
        let gap = base.windows(2).map(|w| w[1] - w[0]).fold(1.0f64, f64::min);
        prop_assume!(gap > 1e-3);
        for (b, t) in base.iter().zip(&shifted) {
            prop_assert!((b + s - t).abs() <= 1e-9 * (1.0 + b.abs() + s.abs()) / gap.min(1.0), "{b} + {s} vs {t}");
        }
    }

    #[test]
    fn vector_and_diagonal_membership_agree(seed in any::<u64>()) {
        let p = stable_poly(seed);
        let mut r = sample_rng(seed, 2);
        let v: Vec<f64> = (0..p.n()).map(|_| r.random_range(-1.0..3.0)).collect();
        let (Ok(vec), Ok(mat)) = (in_cone_vector(&p, &v, CONE_TOL), in_cone_matrix(&p, &SymMatrix::diag(&v), CONE_TOL))
        else { return Ok(()) };
        prop_assert_eq!(vec.verdict.in_closed_cone(), mat.verdict.in_closed_cone());
        prop_assert!((vec.min_root - mat.min_root).abs() <= 1e-7 * (1.0 + vec.min_root.abs()));
    }

    #[test]
    fn locally_psd_matrices_lie_in_the_ek_cone(n in 1usize..=7, kk in 1usize..=7, seed in any::<u64>(), boundary in any::<bool>()) {
        let k = kk.min(n);
        let margin = if boundary { 0.0 } else { 0.1 };
        let a = SymMatrix::random_locally_psd(n, k, margin, &mut sample_rng(seed, 3)).unwrap();
        let rep = in_cone_matrix(&MultiAffinePoly::elementary(n, k).unwrap(), &a, CONE_TOL).unwrap();
        prop_assert!(rep.verdict.in_closed_cone(), "{:?}", rep);
    }

    #[test]
    fn cone_is_convex(seed in any::<u64>(), w in 0.0f64..1.0) {
        let p = stable_poly(seed);
        let mut r = sample_rng(seed, 4);
        let a = sample_in_cone_matrix(&p, 0.05, &mut r).unwrap();
        let b = sample_in_cone_matrix(&p, 0.05, &mut r).unwrap();
        let mid = a.lerp(&b, &w).unwrap();
        let rep = in_cone_matrix(&p, &mid, CONE_TOL).unwrap();
        prop_assert!(matches!(rep.verdict, Verdict::Inside | Verdict::Boundary), "{:?}", rep);
    }

    #[test]
    fn known_stable_polynomials_are_never_rejected(n in 1usize..=6, kk in 1usize..=6, seed in any::<u64>()) {
        let k = kk.min(n);
        let ek = MultiAffinePoly::elementary(n, k).unwrap();
        let d = positive_vec(&mut sample_rng(seed, 5), n, 1.0);
        let k4: MultiAffinePoly<f64> = Graph::complete(4).spanning_tree_poly().unwrap();
        for p in [ek.clone(), ek.scale_variables(&d).unwrap(), k4] {
            prop_assert!(is_stable_probabilistic(&p, 20, seed).unwrap().is_evidence_stable());
        }
    }
}
