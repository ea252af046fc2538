//! The minor lift `Φ`: a multiaffine `p = Σ a_S x^S` becomes the linear
//! principal minor polynomial `P(X) = Σ a_S det(X_S)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::subset::bit_indices;
use crate::poly::{MultiAffinePoly, SubsetMask, UniPoly};
use crate::scalar::{Real, Scalar};
use crate::symmat::SymMatrix;

/// Evaluator for `P = Φ(p)` that walks only the stored (nonzero) terms.
#[derive(Debug, Clone)]
pub struct LpmEval<T> {
    p: MultiAffinePoly<T>,
    terms: Vec<(u32, T)>,
}

impl<T: Scalar> LpmEval<T> {
    pub fn new(p: MultiAffinePoly<T>) -> Self {
        let mut terms: Vec<(u32, T)> = p.raw_terms().map(|(b, c)| (b, c.clone())).collect();
        // Group by minor size so the scratch buffer grows monotonically.
        terms.sort_by_key(|(b, _)| (b.count_ones(), *b));
        Self { p, terms }
    }

    pub fn poly(&self) -> &MultiAffinePoly<T> {
        &self.p
    }

    pub fn eval(&self, a: &SymMatrix<T>) -> Result<T> {
        let mut buf = Vec::new();
        self.eval_with(a, &mut buf)
    }

    /// Evaluation reusing a caller-owned scratch buffer.
    pub fn eval_with(&self, a: &SymMatrix<T>, buf: &mut Vec<T>) -> Result<T> {
        a.check_dim(self.p.n())?;
        Ok(self.terms.iter().fold(T::zero(), |acc, (b, c)| {
            acc + c.clone() * a.principal_minor_bits(*b, buf)
        }))
    }
}

/// `P(A) = Σ a_S det(A_S)`.
pub fn minor_lift_eval<T: Scalar>(p: &MultiAffinePoly<T>, a: &SymMatrix<T>) -> Result<T> {
    a.check_dim(p.n())?;
    let mut buf = Vec::new();
    Ok(p.raw_terms().fold(T::zero(), |acc, (b, c)| {
        acc + c.clone() * a.principal_minor_bits(b, &mut buf)
    }))
}

fn check_restriction<T: Scalar>(p: &MultiAffinePoly<T>, t: &SubsetMask) -> Result<()> {
    if t.n() != p.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            got: t.n(),
        });
    }
    if t.len() + p.degree() < p.n() {
        return Err(Error::UndefinedRestriction {
            size: t.len(),
            n: p.n(),
            degree: p.degree(),
        });
    }
    Ok(())
}

/// The multiaffine polynomial behind `P|_T`, in the variables of `T`
/// (re-indexed increasingly): the coefficient of `x^K` is `a_{K ∪ T^c}`.
pub fn lpm_restriction<T: Scalar>(p: &MultiAffinePoly<T>, t: &SubsetMask) -> Result<MultiAffinePoly<T>> {
    check_restriction(p, t)?;
    let tb = t.bits();
    let outside = !tb & crate::poly::subset::full_bits(p.n());
    let pos: Vec<usize> = t.positions();
    let mut relabel = vec![0usize; p.n()];
    for (new, &old) in pos.iter().enumerate() {
        relabel[old] = new;
    }
    let terms = p
        .raw_terms()
        .filter(|(b, _)| b & outside == outside)
        .map(|(b, c)| {
            let k = bit_indices(b & tb).fold(0u32, |acc, i| acc | (1 << relabel[i]));
            (k, c.clone())
        });
    let n = t.len();
    if n == 0 {
        return Err(Error::VariableCount(0));
    }
    Ok(MultiAffinePoly::from_bits(n, terms))
}

/// `P|_T(A) = Φ(p|_T)(A_T)`. For `T = ∅` this is the coefficient `a_{[n]}`.
pub fn restricted_value<T: Scalar>(p: &MultiAffinePoly<T>, t: &SubsetMask, a: &SymMatrix<T>) -> Result<T> {
    check_restriction(p, t)?;
    a.check_dim(p.n())?;
    if t.is_empty() {
        return Ok(p.coeff_bits(crate::poly::subset::full_bits(p.n())));
    }
    minor_lift_eval(&lpm_restriction(p, t)?, &a.submatrix_bits(t.bits()))
}

/// `P_A(x) = P(A + Diag(x))` expanded as a multiaffine polynomial in `x`:
/// the coefficient of `x^K` is `Σ_{S ⊇ K} a_S det(A_{S∖K})`, which equals
/// `P|_{[n]∖K}(A)`.
pub fn diagonal_shift_poly<T: Scalar>(p: &MultiAffinePoly<T>, a: &SymMatrix<T>) -> Result<MultiAffinePoly<T>> {
    a.check_dim(p.n())?;
    let mut buf = Vec::new();
    let mut out = Vec::new();
    for (s, c) in p.raw_terms() {
        // every K ⊆ S
        let mut k = s;
        loop {
            out.push((k, c.clone() * a.principal_minor_bits(s & !k, &mut buf)));
            if k == 0 {
                break;
            }
            k = (k - 1) & s;
        }
    }
    Ok(MultiAffinePoly::from_bits(p.n(), out))
}

/// `t ↦ P(A − tI)`, recovered by interpolation through `deg(p) + 1` values.
/// Floating scalars use Chebyshev nodes on `[−R, R]` with `R` one plus the
/// Gershgorin radius of `A`; exact scalars use the nodes `0, 1, …, deg p`.
pub fn matrix_pencil_poly<T: Scalar>(p: &MultiAffinePoly<T>, a: &SymMatrix<T>) -> Result<UniPoly<T>> {
    a.check_dim(p.n())?;
    let d = p.degree();
    let nodes: Vec<T> = if T::is_exact() {
        (0..=d as i64).map(T::from_i64).collect()
    } else {
        let radius = 1.0
            + (0..a.n())
                .map(|i| (0..a.n()).map(|j| a.get(i, j).to_f64().abs()).sum::<f64>())
                .fold(0.0, f64::max);
        (0..=d)
            .map(|i| {
                let theta = std::f64::consts::PI * (2 * i + 1) as f64 / (2 * (d + 1)) as f64;
                T::from_f64(radius * theta.cos())
            })
            .collect()
    };
    let eval = LpmEval::new(p.clone());
    let mut buf = Vec::new();
    let values = nodes
        .iter()
        .map(|t| eval.eval_with(&a.shift(&(T::zero() - t.clone())), &mut buf))
        .collect::<Result<Vec<T>>>()?;
    UniPoly::interpolate(&nodes, &values)
}

/// Outcome of comparing `Φ(p*)(A)` with `det(A)·Φ(p)(A⁻¹)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualIdentity<T> {
    pub lhs: T,
    pub rhs: T,
    pub residual: T,
    pub tolerance: T,
    pub holds: bool,
}

/// Checks `Φ(p*)(A) = det(A)·Φ(p)(A⁻¹)` with tolerance
/// `rel·(1 + max(|lhs|, |rhs|))`; exact scalars compare exactly.
pub fn check_dual_identity<T: Scalar>(p: &MultiAffinePoly<T>, a: &SymMatrix<T>, rel: f64) -> Result<DualIdentity<T>> {
    a.check_dim(p.n())?;
    let det = a.det();
    if det.negligible(&a.max_abs().clone().pow_n(a.n())) {
        return Err(Error::Singular);
    }
    let inv = a.inverse()?;
    let lhs = minor_lift_eval(&p.dual(), a)?;
    let rhs = det * minor_lift_eval(p, &inv)?;
    let residual = (lhs.clone() - rhs.clone()).magnitude();
    let scale = if lhs.magnitude() > rhs.magnitude() { lhs.magnitude() } else { rhs.magnitude() };
    let tolerance = if T::is_exact() {
        T::zero()
    } else {
        T::from_f64(rel) * (T::one() + scale)
    };
    let holds = residual <= tolerance;
    Ok(DualIdentity {
        lhs,
        rhs,
        residual,
        tolerance,
        holds,
    })
}

trait PowN: Sized {
    fn pow_n(self, k: usize) -> Self;
}

impl<T: Scalar> PowN for T {
    fn pow_n(self, k: usize) -> Self {
        (0..k).fold(T::one(), |acc, _| acc * self.clone())
    }
}

/// `E_k(A) = e_k(λ(A))` residual helper: the elementary symmetric value of a
/// real vector.
pub fn elementary_value<T: Real>(values: &[T], k: usize) -> T {
    let mut e = vec![T::zero(); k + 1];
    e[0] = T::one();
    for &v in values {
        for j in (1..=k.min(values.len())).rev() {
            e[j] = e[j] + e[j - 1] * v;
        }
    }
    e[k]
}
