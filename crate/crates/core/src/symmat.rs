//! Dense symmetric matrices: principal minors, the symmetric eigenproblem,
//! adjugates, Schur complements, block-diagonal projection and local PSD tests.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det_in_place, inverse_in_place, Dense};
use crate::poly::subset::{bit_indices, k_subset_indices};
use crate::poly::SubsetMask;
use crate::rng;
use crate::scalar::{max_magnitude, Real, Scalar};

const MAX_JACOBI_SWEEPS: usize = 50;

/// Symmetric `n × n` matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    /// Validates squareness and symmetry: `|A_ij - A_ji| ≤ 1e-12 (1 + max|A|)`
    /// for floats, exact equality for exact scalars.
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        let scale = max_magnitude(data.iter());
        for i in 0..n {
            for j in i + 1..n {
                if !data[i * n + j].near(&data[j * n + i], 1e-12, &scale) {
                    return Err(Error::NotSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Self { n, data })
    }

    /// Builds from the upper triangle of `f`; `f(i, j)` is queried for `i ≤ j`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[j * n + i] = v.clone();
                data[i * n + j] = v;
            }
        }
        Self { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![T::one(); n])
    }

    pub fn diag(v: &[T]) -> Self {
        Self::from_fn(v.len(), |i, j| if i == j { v[i].clone() } else { T::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.n.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn to_dense(&self) -> Dense<T> {
        Dense::from_fn(self.n, self.n, |i, j| self.get(i, j).clone())
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> T {
        self.diagonal().into_iter().fold(T::zero(), |a, b| a + b)
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        max_magnitude(self.data.iter())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SymMatrix<U> {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.n)?;
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    /// `A + s I`.
    pub fn shift(&self, s: &T) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] = out.data[i * self.n + i].clone() + s.clone();
        }
        out
    }

    /// `A + Diag(x)`.
    pub fn add_diag(&self, x: &[T]) -> Result<Self> {
        self.check_dim(x.len())?;
        let mut out = self.clone();
        for (i, xi) in x.iter().enumerate() {
            out.data[i * self.n + i] = out.data[i * self.n + i].clone() + xi.clone();
        }
        Ok(out)
    }

    /// `(1 - t) A + t B`.
    pub fn lerp(&self, other: &Self, t: &T) -> Result<Self> {
        self.check_dim(other.n)?;
        let s = T::one() - t.clone();
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| s.clone() * a.clone() + t.clone() * b.clone())
                .collect(),
        })
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.n {
            Err(Error::DimensionMismatch {
                expected: self.n,
                got: n,
            })
        } else {
            Ok(())
        }
    }

    /// Principal submatrix on the subset `S`, re-indexed in increasing order.
    pub fn submatrix(&self, s: &SubsetMask) -> Result<Self> {
        self.check_dim(s.n().max(self.n))?;
        Ok(self.submatrix_bits(s.bits()))
    }

    pub(crate) fn submatrix_bits(&self, bits: u32) -> Self {
        let idx: Vec<usize> = bit_indices(bits).collect();
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    /// `det(A_S)`; the empty minor is one.
    pub fn principal_minor(&self, s: &SubsetMask) -> Result<T> {
        self.check_dim(s.n().max(self.n))?;
        let mut buf = Vec::new();
        Ok(self.principal_minor_bits(s.bits(), &mut buf))
    }

    /// Principal minor reusing `buf` as scratch space.
    pub(crate) fn principal_minor_bits(&self, bits: u32, buf: &mut Vec<T>) -> T {
        buf.clear();
        let k = bits.count_ones() as usize;
        for i in bit_indices(bits) {
            for j in bit_indices(bits) {
                buf.push(self.get(i, j).clone());
            }
        }
        det_in_place(buf, k)
    }

    pub fn det(&self) -> T {
        let mut buf = self.data.clone();
        det_in_place(&mut buf, self.n)
    }

    /// Cofactor matrix transpose, entrywise by cofactor expansion; defined for
    /// singular matrices too.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1);
        }
        let dense = self.to_dense();
        Self::from_fn(n, |i, j| {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let m = dense.minor(&rows, &cols);
            if (i + j) % 2 == 0 {
                m
            } else {
                T::zero() - m
            }
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let mut buf = self.data.clone();
        let inv = inverse_in_place(&mut buf, self.n)?;
        // Symmetrize away elimination round-off.
        let two = T::one() + T::one();
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (inv[i * n + j].clone() + inv[j * n + i].clone()) / two.clone()
        }))
    }

    /// `M - A_11⁻¹ v vᵀ` for `A = [[A_11, vᵀ], [v, M]]`.
    pub fn schur_complement_0(&self) -> Result<Self> {
        let p = self.get(0, 0).clone();
        if p.is_zero() {
            return Err(Error::ZeroPivot);
        }
        let n = self.n;
        Ok(Self::from_fn(n - 1, |i, j| {
            self.get(i + 1, j + 1).clone()
                - self.get(i + 1, 0).clone() * self.get(0, j + 1).clone() / p.clone()
        }))
    }

    /// Zeroes entries whose indices lie in different blocks of `partition`.
    pub fn block_project(&self, partition: &Partition) -> Result<Self> {
        self.check_dim(partition.n())?;
        let label = partition.labels();
        Ok(Self::from_fn(self.n, |i, j| {
            if label[i] == label[j] {
                self.get(i, j).clone()
            } else {
                T::zero()
            }
        }))
    }

    /// `U A Uᵀ`, symmetrized.
    pub fn conjugate(&self, u: &Dense<T>) -> Result<Self> {
        let prod = u.matmul(&self.to_dense())?.matmul(&u.transpose())?;
        let two = T::one() + T::one();
        Ok(Self::from_fn(self.n, |i, j| {
            (prod.get(i, j).clone() + prod.get(j, i).clone()) / two.clone()
        }))
    }

    /// The `k`-th multiplicative compound: all `k × k` minors `det(A[T, S])`
    /// over lexicographically ordered `k`-subsets.
    pub fn compound(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.n {
            return Err(Error::Parameter(format!("compound order {k} for n = {}", self.n)));
        }
        let basis = k_subset_indices(self.n, k);
        let dense = self.to_dense();
        Ok(Self::from_fn(basis.len(), |a, b| dense.minor(&basis[a], &basis[b])))
    }
}

impl<T: Real> SymMatrix<T> {
    /// Ascending eigenvalues and matching orthonormal eigenvectors (columns),
    /// by the cyclic Jacobi method.
    pub fn eigh(&self) -> Result<(Vec<T>, Dense<T>)> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut v = Dense::<T>::identity(n);
        let norm = a.iter().fold(T::zero(), |s, x| s + *x * *x).sqrt();
        let tol = T::from_f64(1e-12).max(T::epsilon() * T::from_f64(10.0)) * norm;
        let off = |a: &[T]| {
            let mut s = T::zero();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        s = s + a[i * n + j] * a[i * n + j];
                    }
                }
            }
            s.sqrt()
        };
        let mut converged = off(&a) <= tol;
        let mut sweeps = 0;
        while !converged {
            if sweeps == MAX_JACOBI_SWEEPS {
                return Err(Error::NoConvergence(MAX_JACOBI_SWEEPS));
            }
            sweeps += 1;
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a[p * n + q];
                    if apq == T::zero() {
                        continue;
                    }
                    let theta = (a[q * n + q] - a[p * n + p]) / (apq + apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                    let c = T::one() / (t * t + T::one()).sqrt();
                    let s = t * c;
                    for r in 0..n {
                        let arp = a[r * n + p];
                        let arq = a[r * n + q];
                        a[r * n + p] = c * arp - s * arq;
                        a[r * n + q] = s * arp + c * arq;
                    }
                    for r in 0..n {
                        let apr = a[p * n + r];
                        let aqr = a[q * n + r];
                        a[p * n + r] = c * apr - s * aqr;
                        a[q * n + r] = s * apr + c * aqr;
                    }
                    a[p * n + q] = T::zero();
                    a[q * n + p] = T::zero();
                    for r in 0..n {
                        let vrp = *v.get(r, p);
                        let vrq = *v.get(r, q);
                        v.set(r, p, c * vrp - s * vrq);
                        v.set(r, q, s * vrp + c * vrq);
                    }
                }
            }
            converged = off(&a) <= tol;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[i * n + i].partial_cmp(&a[j * n + j]).expect("finite eigenvalues"));
        let values = order.iter().map(|&i| a[i * n + i]).collect();
        let vectors = Dense::from_fn(n, n, |r, c| *v.get(r, order[c]));
        Ok((values, vectors))
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        self.eigh().map(|(values, _)| values)
    }

    /// Whether every principal `k × k` submatrix is PSD, i.e. its smallest
    /// eigenvalue is at least `-1e-10 max|A|`.
    pub fn is_k_locally_psd(&self, k: usize) -> Result<bool> {
        if k == 0 || k > self.n {
            return Err(Error::Parameter(format!("k = {k} for n = {}", self.n)));
        }
        let floor = -T::from_f64(1e-10) * self.max_abs();
        for idx in k_subset_indices(self.n, k) {
            let bits = idx.iter().fold(0u32, |b, &i| b | (1 << i));
            let sub = self.submatrix_bits(bits);
            if sub.eigenvalues()?[0] < floor {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest eigenvalue over all principal `k × k` submatrices.
    pub fn min_local_eigenvalue(&self, k: usize) -> Result<T> {
        if k == 0 || k > self.n {
            return Err(Error::Parameter(format!("k = {k} for n = {}", self.n)));
        }
        let mut best = T::infinity();
        for idx in k_subset_indices(self.n, k) {
            let bits = idx.iter().fold(0u32, |b, &i| b | (1 << i));
            best = best.min(self.submatrix_bits(bits).eigenvalues()?[0]);
        }
        Ok(best)
    }

    /// Gershgorin bound on the spectral radius.
    pub fn gershgorin_radius(&self) -> T {
        (0..self.n)
            .map(|i| (0..self.n).fold(T::zero(), |s, j| s + self.get(i, j).abs()))
            .fold(T::zero(), |m, r| m.max(r))
    }
}

impl SymMatrix<f64> {
    /// Standard-normal upper triangle mirrored below the diagonal.
    pub fn random_symmetric(n: usize, seed: u64) -> Self {
        Self::random_with(n, &mut rng::rng_from_seed(seed))
    }

    pub fn random_with(n: usize, rng: &mut impl Rng) -> Self {
        let upper: Vec<f64> = rng::normal_vec(rng, n * (n + 1) / 2);
        let mut k = 0;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                data[i * n + j] = upper[k];
                data[j * n + i] = upper[k];
                k += 1;
            }
        }
        Self { n, data }
    }

    /// A random `k`-locally PSD matrix: a random symmetric matrix shifted so
    /// its smallest local eigenvalue equals `margin (1 + |m|)` where `m` is the
    /// unshifted minimum. `margin = 0` lands on the boundary of `PSD_k`.
    pub fn random_locally_psd(n: usize, k: usize, margin: f64, rng: &mut impl Rng) -> Result<Self> {
        let g = Self::random_with(n, rng);
        let m = g.min_local_eigenvalue(k)?;
        Ok(g.shift(&(-m + margin * (1.0 + m.abs()))))
    }
}

/// Haar-random orthogonal matrix: Gram–Schmidt QR of a Gaussian matrix, with
/// `R` carrying a positive diagonal.
pub fn random_orthogonal(n: usize, seed: u64) -> Dense<f64> {
    random_orthogonal_with(n, &mut rng::rng_from_seed(seed))
}

pub fn random_orthogonal_with(n: usize, rng: &mut impl Rng) -> Dense<f64> {
    let g = Dense::from_fn(n, n, |_, _| rng::normal(rng));
    // Columns of g, orthonormalized with two passes of modified Gram-Schmidt.
    let mut cols: Vec<Vec<f64>> = (0..n).map(|j| (0..n).map(|i| *g.get(i, j)).collect()).collect();
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let dot: f64 = (0..n).map(|i| cols[j][i] * cols[k][i]).sum();
                for i in 0..n {
                    cols[j][i] -= dot * cols[k][i];
                }
            }
        }
        let norm = cols[j].iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut cols[j] {
            *x /= norm;
        }
    }
    Dense::from_fn(n, n, |i, j| cols[j][i])
}

/// A set partition of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Blocks hold 1-based indices; they must be nonempty, disjoint and cover
    /// `{1, ..., n}`. Blocks are stored sorted.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut sorted = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in &b {
                if i == 0 || i > n {
                    return Err(Error::InvalidPartition(format!("index {i} outside 1..={n}")));
                }
                if !seen.insert(i) {
                    return Err(Error::InvalidPartition(format!("index {i} repeated")));
                }
            }
            b.sort_unstable();
            sorted.push(b);
        }
        if seen.len() != n {
            return Err(Error::InvalidPartition(format!(
                "covers {} of {n} indices",
                seen.len()
            )));
        }
        sorted.sort();
        Ok(Self { blocks: sorted })
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn single_block(n: usize) -> Self {
        Self {
            blocks: vec![(1..=n).collect()],
        }
    }

    /// Sequential Chinese-restaurant assignment (concentration one): index
    /// `i` opens a new block with probability `1/i`, otherwise joins an
    /// existing block in proportion to its size.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 1..=n {
            let r = rng.random_range(0..i);
            let mut acc = 0;
            let mut placed = false;
            for b in blocks.iter_mut() {
                acc += b.len();
                if r < acc {
                    b.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                blocks.push(vec![i]);
            }
        }
        Self::new(n, blocks).expect("construction covers every index once")
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block label of each 0-based index.
    pub fn labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n()];
        for (k, b) in self.blocks.iter().enumerate() {
            for &i in b {
                label[i - 1] = k;
            }
        }
        label
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> SymMatrix<f64> {
        SymMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rejects_asymmetric_input() {
        let err = SymMatrix::new(vec![vec![1.0, 2.0], vec![2.1, 1.0]]);
        assert_eq!(err, Err(Error::NotSymmetric { i: 1, j: 2 }));
        assert!(SymMatrix::new(vec![vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn principal_minor_examples() {
        let a = m(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let s = |idx: &[usize]| SubsetMask::from_indices(2, idx).unwrap();
        assert_eq!(a.principal_minor(&s(&[1, 2])).unwrap(), 3.0);
        assert_eq!(a.principal_minor(&s(&[])).unwrap(), 1.0);
        assert_eq!(a.principal_minor(&s(&[1])).unwrap(), 2.0);
    }

    #[test]
    fn eigenvalue_examples() {
        let ev = m(&[&[0.0, 1.0], &[1.0, 0.0]]).eigenvalues().unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
        assert_eq!(SymMatrix::diag(&[3.0, 1.0, 2.0]).eigenvalues().unwrap(), vec![1.0, 2.0, 3.0]);
        let ev = m(&[&[2.0, 1.0], &[1.0, 2.0]]).eigenvalues().unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvectors_diagonalize() {
        let a = SymMatrix::random_symmetric(6, 11);
        let (vals, vecs) = a.eigh().unwrap();
        let d = a.conjugate(&vecs.transpose()).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let target = if i == j { vals[i] } else { 0.0 };
                assert!((d.get(i, j) - target).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(m(&[&[2.0, 1.0], &[1.0, 2.0]]).adjugate(), m(&[&[2.0, -1.0], &[-1.0, 2.0]]));
        assert_eq!(SymMatrix::<f64>::identity(4).adjugate(), SymMatrix::identity(4));
        assert_eq!(
            SymMatrix::diag(&[1.0, 2.0, 3.0]).adjugate(),
            SymMatrix::diag(&[6.0, 3.0, 2.0])
        );
        // singular input still has a cofactor matrix
        let s = m(&[&[1.0, 1.0], &[1.0, 1.0]]);
        assert_eq!(s.adjugate(), m(&[&[1.0, -1.0], &[-1.0, 1.0]]));
    }

    #[test]
    fn schur_complement_examples() {
        assert_eq!(m(&[&[2.0, 1.0], &[1.0, 2.0]]).schur_complement_0().unwrap(), m(&[&[1.5]]));
        let b = m(&[&[5.0, 0.0, 0.0], &[0.0, 1.0, 2.0], &[0.0, 2.0, 3.0]]);
        assert_eq!(b.schur_complement_0().unwrap(), m(&[&[1.0, 2.0], &[2.0, 3.0]]));
        assert_eq!(m(&[&[1.0, 1.0], &[1.0, 1.0]]).schur_complement_0().unwrap(), m(&[&[0.0]]));
        assert_eq!(
            m(&[&[0.0, 1.0], &[1.0, 1.0]]).schur_complement_0(),
            Err(Error::ZeroPivot)
        );
    }

    #[test]
    fn block_projection_examples() {
        let a = SymMatrix::random_symmetric(3, 5);
        assert_eq!(
            a.block_project(&Partition::singletons(3)).unwrap(),
            SymMatrix::diag(&a.diagonal())
        );
        assert_eq!(a.block_project(&Partition::single_block(3)).unwrap(), a);
        let p = Partition::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        let b = a.block_project(&p).unwrap();
        assert_eq!(*b.get(0, 2), 0.0);
        assert_eq!(*b.get(1, 2), 0.0);
        assert_eq!(b.get(0, 1), a.get(0, 1));
        assert!(a.block_project(&Partition::singletons(4)).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(Partition::new(3, vec![vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![1, 2, 3], vec![]]).is_err());
        assert!(Partition::new(2, vec![vec![1, 3]]).is_err());
        let mut r = rng::rng_from_seed(3);
        for n in 1..8 {
            assert_eq!(Partition::random(n, &mut r).n(), n);
        }
    }

    #[test]
    fn local_psd_examples() {
        let a = m(&[&[1.0, 2.0], &[2.0, 1.0]]);
        assert!(a.is_k_locally_psd(1).unwrap());
        assert!(!a.is_k_locally_psd(2).unwrap());
        let g = SymMatrix::random_symmetric(5, 2);
        let psd = SymMatrix::identity(5).conjugate(&g.to_dense()).unwrap();
        for k in 1..=5 {
            assert!(psd.is_k_locally_psd(k).unwrap());
        }
    }

    #[test]
    fn random_generation_is_deterministic() {
        assert_eq!(SymMatrix::random_symmetric(4, 9), SymMatrix::random_symmetric(4, 9));
        let u = random_orthogonal(5, 1);
        assert!(u.orthogonality_defect() < 1e-12);
        let u1 = random_orthogonal(1, 4);
        assert_eq!(u1.get(0, 0).abs(), 1.0);
        assert_eq!(random_orthogonal(3, 8), random_orthogonal(3, 8));
    }

    #[test]
    fn compound_of_diagonal() {
        let d = SymMatrix::diag(&[2.0, 3.0, 5.0]);
        assert_eq!(d.compound(2).unwrap(), SymMatrix::diag(&[6.0, 10.0, 15.0]));
    }
}
