use std::collections::BTreeMap;
use std::fmt;

use super::perm::Permutation;
use super::subset::{bit_indices, check_n, full_bits, k_subset_indices, SubsetMask};
use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::{max_magnitude, sign_of, Scalar};

/// A multiaffine polynomial `Σ_S a_S x^S` in `n ≤ 16` variables, keyed by
/// subset bitmask. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiAffinePoly<T> {
    n: usize,
    terms: BTreeMap<u32, T>,
    degree: usize,
}

impl<T: Scalar> MultiAffinePoly<T> {
    /// Builds a polynomial from subset/coefficient pairs; repeated subsets
    /// are summed.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (SubsetMask, T)>) -> Result<Self> {
        check_n(n)?;
        let mut raw = Vec::new();
        for (s, c) in terms {
            if s.bits() & !full_bits(n) != 0 {
                return Err(Error::IndexOutOfRange {
                    index: 32 - s.bits().leading_zeros() as usize,
                    n,
                });
            }
            raw.push((s.bits(), c));
        }
        Ok(Self::from_bits(n, raw))
    }

    /// Like [`MultiAffinePoly::new`] with raw bitmasks; bits above `n` are the
    /// caller's responsibility.
    pub(crate) fn from_bits(n: usize, terms: impl IntoIterator<Item = (u32, T)>) -> Self {
        let mut map: BTreeMap<u32, T> = BTreeMap::new();
        for (b, c) in terms {
            let e = map.entry(b).or_insert_with(T::zero);
            *e = e.clone() + c;
        }
        let scale = max_magnitude(map.values());
        map.retain(|_, c| !c.negligible(&scale));
        let degree = map.keys().map(|b| b.count_ones() as usize).max().unwrap_or(0);
        Self {
            n,
            terms: map,
            degree,
        }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn constant(n: usize, c: T) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_bits(n, [(0, c)]))
    }

    /// The monomial `x^S` with coefficient one.
    pub fn monomial(n: usize, indices: &[usize]) -> Result<Self> {
        let s = SubsetMask::from_indices(n, indices)?;
        Self::new(n, [(s, T::one())])
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: &[T]) -> Result<Self> {
        let n = coeffs.len();
        check_n(n)?;
        Ok(Self::from_bits(
            n,
            coeffs.iter().enumerate().map(|(i, c)| (1u32 << i, c.clone())),
        ))
    }

    /// The elementary symmetric polynomial `e_k` in `n` variables.
    pub fn elementary(n: usize, k: usize) -> Result<Self> {
        check_n(n)?;
        if k > n {
            return Err(Error::DegreeTooLarge { k, n });
        }
        Ok(Self::from_bits(
            n,
            k_subset_indices(n, k)
                .into_iter()
                .map(|idx| (idx.iter().fold(0u32, |b, &i| b | (1 << i)), T::one())),
        ))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .keys()
            .all(|b| b.count_ones() as usize == self.degree)
    }

    /// Coefficient of `x^S`.
    pub fn coeff(&self, s: &SubsetMask) -> T {
        self.coeff_bits(s.bits())
    }

    pub(crate) fn coeff_bits(&self, bits: u32) -> T {
        self.terms.get(&bits).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (SubsetMask, &T)> + '_ {
        let n = self.n;
        self.terms
            .iter()
            .map(move |(&b, c)| (SubsetMask::new(n, b).expect("stored subsets are in range"), c))
    }

    pub(crate) fn raw_terms(&self) -> impl Iterator<Item = (u32, &T)> + '_ {
        self.terms.iter().map(|(&b, c)| (b, c))
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.n {
            Err(Error::DimensionMismatch {
                expected: self.n,
                got: len,
            })
        } else {
            Ok(())
        }
    }

    /// `Σ_S a_S ∏_{i∈S} v_i`.
    pub fn eval(&self, v: &[T]) -> Result<T> {
        self.check_dim(v.len())?;
        Ok(self.terms.iter().fold(T::zero(), |acc, (&b, c)| {
            acc + bit_indices(b).fold(c.clone(), |m, i| m * v[i].clone())
        }))
    }

    /// The dual `x_1⋯x_n · p(1/x_1, …, 1/x_n)`: coefficients move to
    /// complementary subsets.
    pub fn dual(&self) -> Self {
        let full = full_bits(self.n);
        Self::from_bits(self.n, self.raw_terms().map(|(b, c)| (full & !b, c.clone())))
    }

    /// `∏_{i∈S} ∂/∂x_i p`.
    pub fn partial_subset(&self, s: &SubsetMask) -> Result<Self> {
        self.check_dim(s.n().max(self.n))?;
        let sb = s.bits();
        Ok(Self::from_bits(
            self.n,
            self.raw_terms()
                .filter(|(b, _)| b & sb == sb)
                .map(|(b, c)| (b & !sb, c.clone())),
        ))
    }

    /// `D_a p = Σ_i a_i ∂p/∂x_i`.
    pub fn directional_derivative(&self, a: &[T]) -> Result<Self> {
        self.check_dim(a.len())?;
        let mut out = Vec::new();
        for (b, c) in self.raw_terms() {
            for i in bit_indices(b) {
                if !a[i].is_zero() {
                    out.push((b & !(1 << i), c.clone() * a[i].clone()));
                }
            }
        }
        Ok(Self::from_bits(self.n, out))
    }

    /// `τ(p)`: the coefficient of `x^{τ(S)}` is the coefficient of `x^S` in `p`.
    pub fn apply_permutation(&self, tau: &Permutation) -> Result<Self> {
        self.check_dim(tau.len())?;
        Ok(Self::from_bits(
            self.n,
            self.raw_terms().map(|(b, c)| (tau.apply_bits(b), c.clone())),
        ))
    }

    /// The univariate restriction `t ↦ p(v - t a)`, expanded term by term.
    pub fn restrict_line(&self, v: &[T], a: &[T]) -> Result<UniPoly<T>> {
        self.check_dim(v.len())?;
        self.check_dim(a.len())?;
        let mut acc = vec![T::zero(); self.degree + 1];
        let mut prod: Vec<T> = Vec::with_capacity(self.degree + 1);
        for (b, c) in self.raw_terms() {
            prod.clear();
            prod.push(c.clone());
            for i in bit_indices(b) {
                // prod <- prod * (v_i - a_i t)
                prod.push(T::zero());
                for k in (0..prod.len()).rev() {
                    let shifted = if k > 0 {
                        prod[k - 1].clone() * a[i].clone()
                    } else {
                        T::zero()
                    };
                    prod[k] = prod[k].clone() * v[i].clone() - shifted;
                }
            }
            for (k, x) in prod.iter().enumerate() {
                acc[k] = acc[k].clone() + x.clone();
            }
        }
        Ok(UniPoly::new(acc))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.n)?;
        Ok(Self::from_bits(
            self.n,
            self.raw_terms()
                .chain(other.raw_terms())
                .map(|(b, c)| (b, c.clone())),
        ))
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_bits(
            self.n,
            self.raw_terms().map(|(b, c)| (b, c.clone() * s.clone())),
        )
    }

    /// Product of polynomials in disjoint variable sets.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.n)?;
        let mut out = Vec::new();
        for (b1, c1) in self.raw_terms() {
            for (b2, c2) in other.raw_terms() {
                if b1 & b2 != 0 {
                    return Err(Error::NotMultiaffine(
                        (b1 & b2).trailing_zeros() as usize + 1,
                    ));
                }
                out.push((b1 | b2, c1.clone() * c2.clone()));
            }
        }
        Ok(Self::from_bits(self.n, out))
    }

    /// `p(D x)` for the diagonal `D = diag(d)`.
    pub fn scale_variables(&self, d: &[T]) -> Result<Self> {
        self.check_dim(d.len())?;
        Ok(Self::from_bits(
            self.n,
            self.raw_terms().map(|(b, c)| {
                (b, bit_indices(b).fold(c.clone(), |m, i| m * d[i].clone()))
            }),
        ))
    }

    /// `x_0 · p`, with the new variable placed first (old `x_i` becomes index
    /// `i + 1`).
    pub fn times_new_variable(&self) -> Result<Self> {
        check_n(self.n + 1)?;
        Ok(Self::from_bits(
            self.n + 1,
            self.raw_terms().map(|(b, c)| ((b << 1) | 1, c.clone())),
        ))
    }

    /// The same polynomial viewed in `n_new ≥ n` variables.
    pub fn embed(&self, n_new: usize) -> Result<Self> {
        check_n(n_new)?;
        if n_new < self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: n_new,
            });
        }
        Ok(Self::from_bits(
            n_new,
            self.raw_terms().map(|(b, c)| (b, c.clone())),
        ))
    }

    /// Sign shared by all nonzero coefficients, or `None` when they are mixed
    /// (or the polynomial is zero).
    pub fn common_sign(&self) -> Option<i32> {
        let mut signs = self.terms.values().map(sign_of);
        let first = signs.next()?;
        signs.all(|s| s == first).then_some(first)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MultiAffinePoly<U> {
        MultiAffinePoly::from_bits(self.n, self.raw_terms().map(|(b, c)| (b, f(c))))
    }
}

impl<T: Scalar> fmt::Display for MultiAffinePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&b, c)| {
                let vars: Vec<String> = bit_indices(b).map(|i| format!("x{}", i + 1)).collect();
                if vars.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MultiAffinePoly<f64>;

    fn subset(n: usize, idx: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(n, idx).unwrap()
    }

    #[test]
    fn eval_examples() {
        let e2 = P::elementary(3, 2).unwrap();
        assert_eq!(e2.eval(&[1.0, 2.0, 3.0]).unwrap(), 11.0);
        let e1 = P::elementary(2, 1).unwrap();
        assert_eq!(e1.eval(&[5.0, -5.0]).unwrap(), 0.0);
        let x1x2 = P::monomial(2, &[1, 2]).unwrap();
        assert_eq!(x1x2.eval(&[3.0, 4.0]).unwrap(), 12.0);
        assert!(matches!(
            e2.eval(&[1.0, 2.0]),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn elementary_examples() {
        let e = P::elementary(3, 2).unwrap();
        assert_eq!(e.num_terms(), 3);
        for s in [[1, 2], [1, 3], [2, 3]] {
            assert_eq!(e.coeff(&subset(3, &s)), 1.0);
        }
        let e0 = P::elementary(5, 0).unwrap();
        assert_eq!(e0.num_terms(), 1);
        assert_eq!(e0.coeff(&SubsetMask::empty(5).unwrap()), 1.0);
        assert_eq!(P::elementary(4, 4).unwrap(), P::monomial(4, &[1, 2, 3, 4]).unwrap());
        assert_eq!(P::elementary(3, 4), Err(Error::DegreeTooLarge { k: 4, n: 3 }));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            P::monomial(2, &[1]).unwrap().dual(),
            P::monomial(2, &[2]).unwrap()
        );
        let e1 = P::elementary(2, 1).unwrap();
        assert_eq!(e1.dual(), e1);
        for k in 0..=5 {
            assert_eq!(
                P::elementary(5, k).unwrap().dual(),
                P::elementary(5, 5 - k).unwrap()
            );
        }
    }

    #[test]
    fn partial_examples() {
        let e2 = P::elementary(3, 2).unwrap();
        assert_eq!(
            e2.partial_subset(&subset(3, &[1])).unwrap(),
            P::linear(&[0.0, 1.0, 1.0]).unwrap()
        );
        let x1x2 = P::monomial(2, &[1, 2]).unwrap();
        assert_eq!(
            x1x2.partial_subset(&subset(2, &[1, 2])).unwrap(),
            P::constant(2, 1.0).unwrap()
        );
        let x1x2 = P::monomial(3, &[1, 2]).unwrap();
        assert!(x1x2.partial_subset(&subset(3, &[3])).unwrap().is_zero());
    }

    #[test]
    fn directional_derivative_examples() {
        let e2 = P::elementary(3, 2).unwrap();
        assert_eq!(
            e2.directional_derivative(&[1.0; 3]).unwrap(),
            P::elementary(3, 1).unwrap().scale(&2.0)
        );
        assert_eq!(
            e2.directional_derivative(&[1.0, 0.0, 0.0]).unwrap(),
            P::linear(&[0.0, 1.0, 1.0]).unwrap()
        );
        let c = P::constant(3, 4.0).unwrap();
        assert!(c.directional_derivative(&[1.0; 3]).unwrap().is_zero());
    }

    #[test]
    fn permutation_examples() {
        let tau = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(
            P::monomial(3, &[1, 3]).unwrap().apply_permutation(&tau).unwrap(),
            P::monomial(3, &[2, 3]).unwrap()
        );
        let e2 = P::elementary(4, 2).unwrap();
        let sigma = Permutation::from_one_line(&[3, 1, 4, 2]).unwrap();
        assert_eq!(e2.apply_permutation(&sigma).unwrap(), e2);
        let p = P::monomial(4, &[1, 4]).unwrap();
        assert_eq!(p.apply_permutation(&Permutation::identity(4)).unwrap(), p);
        assert!(p.apply_permutation(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn restrict_line_examples() {
        let e2 = P::elementary(3, 2).unwrap();
        let q = e2.restrict_line(&[1.0, 2.0, 3.0], &[1.0; 3]).unwrap();
        assert_eq!(q.coeffs(), &[11.0, -12.0, 3.0]);
        let e1 = P::elementary(2, 1).unwrap();
        assert_eq!(
            e1.restrict_line(&[1.0, 1.0], &[1.0, 1.0]).unwrap().coeffs(),
            &[2.0, -2.0]
        );
        let x1x2 = P::monomial(2, &[1, 2]).unwrap();
        assert_eq!(
            x1x2.restrict_line(&[0.0, 0.0], &[1.0, 1.0]).unwrap().coeffs(),
            &[0.0, 0.0, 1.0]
        );
    }

    #[test]
    fn multiplying_shared_variables_fails() {
        let x1 = P::monomial(2, &[1]).unwrap();
        assert_eq!(x1.mul(&x1), Err(Error::NotMultiaffine(1)));
        let x2 = P::monomial(2, &[2]).unwrap();
        assert_eq!(x1.mul(&x2).unwrap(), P::monomial(2, &[1, 2]).unwrap());
    }

    #[test]
    fn times_new_variable_shifts_indices() {
        let q = P::monomial(2, &[2]).unwrap();
        assert_eq!(q.times_new_variable().unwrap(), P::monomial(3, &[1, 3]).unwrap());
    }

    #[test]
    fn exact_scalars_work() {
        let e2 = MultiAffinePoly::<BigRational>::elementary(3, 2).unwrap();
        let v: Vec<BigRational> = [1, 2, 3].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        assert_eq!(e2.eval(&v).unwrap(), BigRational::from_integer(11.into()));
        assert!(e2.common_sign() == Some(1));
    }
}
