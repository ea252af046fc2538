//! Dense general matrices and elimination kernels shared by the symmetric
//! matrix code.

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Dense<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Determinant of the square submatrix on the given 0-based rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> T {
        assert_eq!(rows.len(), cols.len(), "minor must be square");
        let k = rows.len();
        let mut buf = Vec::with_capacity(k * k);
        for &r in rows {
            for &c in cols {
                buf.push(self.get(r, c).clone());
            }
        }
        det_in_place(&mut buf, k)
    }

    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut buf = self.data.clone();
        Ok(det_in_place(&mut buf, self.rows))
    }

    pub fn max_abs(&self) -> T {
        crate::scalar::max_magnitude(self.data.iter())
    }
}

impl<T: Real> Dense<T> {
    /// Largest entry of `|M Mᵀ - I|`.
    pub fn orthogonality_defect(&self) -> T {
        let mmt = self.matmul(&self.transpose()).expect("square");
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in 0..self.rows {
                let target = if i == j { T::one() } else { T::zero() };
                worst = worst.max((*mmt.get(i, j) - target).abs());
            }
        }
        worst
    }
}

/// Determinant of the `k × k` row-major block in `buf`, by Gaussian
/// elimination with partial pivoting (largest magnitude). `buf` is clobbered.
/// The empty matrix has determinant one.
pub fn det_in_place<T: Scalar>(buf: &mut [T], k: usize) -> T {
    let mut det = T::one();
    for col in 0..k {
        let mut piv = col;
        let mut best = buf[col * k + col].magnitude();
        for r in col + 1..k {
            let m = buf[r * k + col].magnitude();
            if m > best {
                best = m;
                piv = r;
            }
        }
        if best.is_zero() {
            return T::zero();
        }
        if piv != col {
            for j in 0..k {
                buf.swap(col * k + j, piv * k + j);
            }
            det = T::zero() - det;
        }
        let p = buf[col * k + col].clone();
        det = det * p.clone();
        for r in col + 1..k {
            let f = buf[r * k + col].clone() / p.clone();
            if f.is_zero() {
                continue;
            }
            for j in col + 1..k {
                let v = buf[r * k + j].clone() - f.clone() * buf[col * k + j].clone();
                buf[r * k + j] = v;
            }
        }
    }
    det
}

/// Inverse of a `k × k` row-major matrix by Gauss–Jordan elimination.
pub fn inverse_in_place<T: Scalar>(buf: &mut [T], k: usize) -> Result<Vec<T>> {
    let mut inv = vec![T::zero(); k * k];
    for i in 0..k {
        inv[i * k + i] = T::one();
    }
    let scale = crate::scalar::max_magnitude(buf.iter());
    for col in 0..k {
        let mut piv = col;
        let mut best = buf[col * k + col].magnitude();
        for r in col + 1..k {
            let m = buf[r * k + col].magnitude();
            if m > best {
                best = m;
                piv = r;
            }
        }
        if best.negligible(&scale) {
            return Err(Error::Singular);
        }
        if piv != col {
            for j in 0..k {
                buf.swap(col * k + j, piv * k + j);
                inv.swap(col * k + j, piv * k + j);
            }
        }
        let p = buf[col * k + col].clone();
        for j in 0..k {
            buf[col * k + j] = buf[col * k + j].clone() / p.clone();
            inv[col * k + j] = inv[col * k + j].clone() / p.clone();
        }
        for r in 0..k {
            if r == col {
                continue;
            }
            let f = buf[r * k + col].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..k {
                let a = buf[r * k + j].clone() - f.clone() * buf[col * k + j].clone();
                buf[r * k + j] = a;
                let b = inv[r * k + j].clone() - f.clone() * inv[col * k + j].clone();
                inv[r * k + j] = b;
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_with_pivoting() {
        let mut m = vec![0.0, 1.0, 1.0, 0.0];
        assert_eq!(det_in_place(&mut m, 2), -1.0);
        let mut empty: Vec<f64> = vec![];
        assert_eq!(det_in_place(&mut empty, 0), 1.0);
        let mut sing = vec![1.0, 2.0, 2.0, 4.0];
        assert_eq!(det_in_place(&mut sing, 2), 0.0);
    }

    #[test]
    fn inverse_of_2x2() {
        let mut m: Vec<f64> = vec![2.0, 1.0, 1.0, 2.0];
        let inv = inverse_in_place(&mut m, 2).unwrap();
        let expect = [2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0];
        for (a, b) in inv.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        let mut s = vec![1.0, 1.0, 1.0, 1.0];
        assert_eq!(inverse_in_place(&mut s, 2), Err(Error::Singular));
    }

    #[test]
    fn minors_of_rectangular_selection() {
        let m: Dense<f64> = Dense::from_rows(vec![vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0], vec![7.0, 8.0, 10.0]]).unwrap();
        assert!((m.minor(&[0, 1], &[1, 2]) - (2.0 * 6.0 - 3.0 * 5.0)).abs() < 1e-12);
        assert!((m.det().unwrap() - (-3.0)).abs() < 1e-12);
    }
}
