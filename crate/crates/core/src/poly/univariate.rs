use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{max_magnitude, sign_of, Scalar};

/// Univariate polynomial with ascending coefficients `c[0] + c[1] t + ...`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de> + Scalar"))]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    /// Trailing coefficients that are negligible relative to the largest one
    /// are dropped, so the leading coefficient is nonzero.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        let scale = max_magnitude(coeffs.iter());
        while coeffs.last().is_some_and(|c| c.negligible(&scale)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `∏ (t - r)`.
    pub fn from_roots(roots: &[T]) -> Self {
        roots.iter().fold(Self::constant(T::one()), |acc, r| {
            acc.mul(&Self::new(vec![T::zero() - r.clone(), T::one()]))
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Newton divided-difference interpolation through `(nodes[i], values[i])`,
    /// returned in the monomial basis.
    pub fn interpolate(nodes: &[T], values: &[T]) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: nodes.len(),
                got: values.len(),
            });
        }
        let m = nodes.len();
        let mut dd = values.to_vec();
        for level in 1..m {
            for i in (level..m).rev() {
                let denom = nodes[i].clone() - nodes[i - level].clone();
                if denom.is_zero() {
                    return Err(Error::Parameter("repeated interpolation node".into()));
                }
                dd[i] = (dd[i].clone() - dd[i - 1].clone()) / denom;
            }
        }
        // Horner on the Newton form.
        let mut acc: Vec<T> = Vec::with_capacity(m);
        for k in (0..m).rev() {
            // acc <- acc * (t - x_k) + dd[k]
            let mut next = vec![T::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] = next[i + 1].clone() + a.clone();
                next[i] = next[i].clone() - a.clone() * nodes[k].clone();
            }
            next[0] = next[0].clone() + dd[k].clone();
            acc = next;
        }
        Ok(Self::new(acc))
    }

    /// Quotient and remainder of polynomial long division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dl = divisor.leading();
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd].clone() / dl.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * c.clone();
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor by the Euclidean algorithm. Meaningful for
    /// exact scalars.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&(T::one() / lead))
    }

    /// Number of distinct real roots, by Sturm's theorem. Exact scalars only
    /// give a certified count.
    pub fn distinct_real_root_count(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1])?;
            seq.push(r.scale(&(T::zero() - T::one())));
        }
        seq.pop();
        let changes = |signs: Vec<i32>| {
            let nz: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let at_pos_inf = changes(seq.iter().map(|p| sign_of(&p.leading())).collect());
        let at_neg_inf = changes(
            seq.iter()
                .map(|p| {
                    let s = sign_of(&p.leading());
                    if p.degree() % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                })
                .collect(),
        );
        Ok(at_neg_inf - at_pos_inf)
    }

    /// Whether every complex root is real, decided by comparing the Sturm count
    /// with the degree of the squarefree part. Certified for exact scalars.
    pub fn is_real_rooted_exact(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == 0 {
            return Ok(true);
        }
        let g = self.gcd(&self.derivative());
        let (squarefree, _) = self.div_rem(&g)?;
        Ok(squarefree.distinct_real_root_count()? == squarefree.degree())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}
