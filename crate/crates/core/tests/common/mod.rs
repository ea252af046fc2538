#![allow(dead_code)]

use lpm_core::{MultiAffinePoly, SubsetMask, SymMatrix};
use proptest::prelude::*;

/// Random multiaffine polynomial in `n ∈ 1..=max_n` variables with up to eight terms.
pub fn poly(max_n: usize) -> impl Strategy<Value = MultiAffinePoly<f64>> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..1u32 << n, -3.0f64..3.0), 1..8).prop_map(move |terms| {
            MultiAffinePoly::new(n, terms.into_iter().map(|(b, c)| (SubsetMask::new(n, b).unwrap(), c))).unwrap()
        })
    })
}

/// Symmetric matrix with entries in `[-2, 2]`.
pub fn sym(n: usize) -> impl Strategy<Value = SymMatrix<f64>> {
    prop::collection::vec(-2.0f64..2.0, n * (n + 1) / 2).prop_map(move |upper| {
        let mut rows = vec![vec![0.0; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                rows[i][j] = upper[k];
                rows[j][i] = upper[k];
                k += 1;
            }
        }
        SymMatrix::new(rows).unwrap()
    })
}

/// A polynomial together with a matching symmetric matrix.
pub fn poly_and_matrix(max_n: usize) -> impl Strategy<Value = (MultiAffinePoly<f64>, SymMatrix<f64>)> {
    poly(max_n).prop_flat_map(|p| {
        let n = p.n();
        (Just(p), sym(n))
    })
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}

/// Determinant of a small integer matrix by cofactor expansion.
pub fn laplace_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * laplace_det(&minor)
        })
        .sum()
}
