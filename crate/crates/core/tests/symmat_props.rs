mod common;

use common::{close, laplace_det, sym};
use lpm_core::roots::real_roots;
use lpm_core::{BigRational, Partition, SubsetMask, SymMatrix, UniPoly};
use proptest::prelude::*;

fn sized(lo: usize, hi: usize) -> impl Strategy<Value = SymMatrix<f64>> {
    (lo..=hi).prop_flat_map(sym)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn adjugate_times_matrix_is_determinant(a in sized(1, 8)) {
        let n = a.n();
        let adj = a.adjugate();
        let det = a.det();
        let scale = 1.0 + det.abs() + a.max_abs().powi(n as i32);
        for i in 0..n {
            for j in 0..n {
                let prod: f64 = (0..n).map(|k| a.get(i, k) * adj.get(k, j)).sum();
                let want = if i == j { det } else { 0.0 };
                prop_assert!((prod - want).abs() <= 1e-9 * scale, "({i},{j}): {prod} vs {want}");
            }
        }
    }

    #[test]
    fn schur_complement_determinant_formula(a in sized(2, 7)) {
        prop_assume!(a.get(0, 0).abs() > 1e-3);
        let s = a.schur_complement_0().unwrap();
        let lhs = a.det();
        let rhs = a.get(0, 0) * s.det();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()) / a.get(0, 0).abs().min(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn eigenvalues_are_characteristic_roots(a in sized(1, 6)) {
        let lambda = a.eigenvalues().unwrap();
        let gaps = lambda.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        prop_assume!(gaps > 1e-3);
        let n = a.n();
        let nodes: Vec<f64> = (0..=n).map(|i| -3.0 + 6.0 * i as f64 / n as f64).collect();
        let values: Vec<f64> = nodes.iter().map(|t| a.shift(&-t).det()).collect();
        let q = UniPoly::interpolate(&nodes, &values).unwrap();
        let roots = real_roots(&q, 1e-7).unwrap();
        prop_assert_eq!(roots.len(), n);
        for (r, l) in roots.iter().zip(&lambda) {
            prop_assert!((r - l).abs() <= 1e-8 * (1.0 + l.abs()) / gaps.min(1.0), "{r} vs {l}");
        }
    }

    #[test]
    fn block_projection_is_idempotent_with_blockwise_spectrum(
        (a, labels) in (1usize..=7).prop_flat_map(|n| (sym(n), prop::collection::vec(0usize..3, n)))
    ) {
        let n = a.n();
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); 3];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        blocks.retain(|b| !b.is_empty());
        let part = Partition::new(n, blocks.clone()).unwrap();
        let once = a.block_project(&part).unwrap();
        prop_assert_eq!(once.block_project(&part).unwrap(), once.clone());
        let mut want: Vec<f64> = blocks
            .iter()
            .flat_map(|b| a.submatrix(&SubsetMask::from_indices(n, b).unwrap()).unwrap().eigenvalues().unwrap())
            .collect();
        want.sort_by(f64::total_cmp);
        for (g, w) in once.eigenvalues().unwrap().iter().zip(&want) {
            prop_assert!(close(*g, *w, 1e-9));
        }
    }

    #[test]
    fn exact_principal_minors_match_laplace(
        (n, entries, bits) in (1usize..=5).prop_flat_map(|n| {
            (Just(n), prop::collection::vec(-6i64..6, n * (n + 1) / 2), 1u32..(1 << n))
        })
    ) {
        let mut rows = vec![vec![0i64; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                rows[i][j] = entries[k];
                rows[j][i] = entries[k];
                k += 1;
            }
        }
        let a = SymMatrix::new(
            rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect(),
        )
        .unwrap();
        let s = SubsetMask::new(n, bits).unwrap();
        let idx = s.positions();
        let sub: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| rows[i][j]).collect()).collect();
        prop_assert_eq!(a.principal_minor(&s).unwrap(), BigRational::from_integer(laplace_det(&sub).into()));
    }
}
