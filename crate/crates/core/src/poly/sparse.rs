use std::collections::BTreeMap;
use std::fmt;

use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse multivariate polynomial over named variables, keyed by exponent
/// vector. With rational coefficients this is exact ring arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct SparsePoly<T> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> SparsePoly<T> {
    pub fn zero(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: T) -> Self {
        let mut p = Self::zero(vars);
        p.insert(vec![0; vars.len()], c);
        p
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let i = p.index_of(name)?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        p.insert(e, T::one());
        Ok(p)
    }

    /// Builds from `(exponents, coefficient)` pairs; repeats are summed.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    got: e.len(),
                });
            }
            p.insert(e, c);
        }
        Ok(p)
    }

    fn insert(&mut self, e: Vec<u32>, c: T) {
        let entry = self.terms.entry(e).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographically descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[u32]) -> T {
        self.terms.get(exponents).cloned().unwrap_or_else(T::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.total_degree();
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Whether `name` occurs with positive exponent in some term.
    pub fn involves(&self, name: &str) -> Result<bool> {
        let i = self.index_of(name)?;
        Ok(self.terms.keys().any(|e| e[i] > 0))
    }

    /// Re-expresses both operands over a common variable list: `self`'s
    /// variables first, then those only in `other`. Shared variables must
    /// appear in the same relative order.
    fn align(&self, other: &Self) -> Result<(Self, Self)> {
        if self.vars == other.vars {
            return Ok((self.clone(), other.clone()));
        }
        let shared: Vec<&String> = self.vars.iter().filter(|v| other.vars.contains(v)).collect();
        let shared_other: Vec<&String> = other.vars.iter().filter(|v| self.vars.contains(v)).collect();
        if shared != shared_other {
            return Err(Error::VariableOrder(format!(
                "{:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().filter(|v| !self.vars.contains(v)).cloned());
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        Ok((self.reindex(&names), other.reindex(&names)))
    }

    fn reindex(&self, vars: &[&str]) -> Self {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                ne[pos[i]] = x;
            }
            out.terms.insert(ne, c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (mut a, b) = self.align(other)?;
        for (e, c) in b.terms {
            a.insert(e, c);
        }
        Ok(a)
    }

    pub fn neg(&self) -> Self {
        self.scale(&(T::zero() - T::one()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        if !s.is_zero() {
            for (e, c) in &self.terms {
                out.terms.insert(e.clone(), c.clone() * s.clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        let names: Vec<&str> = a.vars.iter().map(|s| s.as_str()).collect();
        let mut out = Self::zero(&names);
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.insert(e, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `name`.
    pub fn derivative(&self, name: &str) -> Result<Self> {
        let i = self.index_of(name)?;
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                out.insert(ne, c.clone() * T::from_i64(e[i] as i64));
            }
        }
        Ok(out)
    }

    /// Substitutes the constant `value` for `name`; the variable list is kept.
    pub fn substitute(&self, name: &str, value: &T) -> Result<Self> {
        let i = self.index_of(name)?;
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[i];
            ne[i] = 0;
            let mut m = c.clone();
            for _ in 0..k {
                m = m * value.clone();
            }
            out.insert(ne, m);
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[T]) -> Result<T> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        Ok(self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    m = m * x.clone();
                }
            }
            acc + m
        }))
    }

    /// `t ↦ f(v - t a)`, expanded exactly in the scalar type.
    pub fn restrict_line(&self, v: &[T], a: &[T]) -> Result<UniPoly<T>> {
        for len in [v.len(), a.len()] {
            if len != self.vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: self.vars.len(),
                    got: len,
                });
            }
        }
        let lines: Vec<UniPoly<T>> = v
            .iter()
            .zip(a)
            .map(|(vi, ai)| UniPoly::new(vec![vi.clone(), T::zero() - ai.clone()]))
            .collect();
        let mut acc = UniPoly::zero();
        for (e, c) in &self.terms {
            let mut m = UniPoly::constant(c.clone());
            for (line, &k) in lines.iter().zip(e) {
                for _ in 0..k {
                    m = m.mul(line);
                }
            }
            acc = acc.add(&m);
        }
        Ok(acc)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SparsePoly<U> {
        let names: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut out = SparsePoly::zero(&names);
        for (e, c) in &self.terms {
            out.insert(e.clone(), f(c));
        }
        out
    }
}

impl<T: Scalar> fmt::Display for SparsePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&x, _)| x > 0)
                .map(|(&x, v)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let negative = *c < T::zero();
            let mag = c.magnitude();
            let body = if monomial.is_empty() {
                format!("{mag}")
            } else if mag.is_one() {
                monomial.join("*")
            } else {
                format!("{mag}*{}", monomial.join("*"))
            };
            match (k, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type E = SparsePoly<BigRational>;
    const AB: [&str; 2] = ["a", "b"];

    fn v(name: &str) -> E {
        E::var(&AB, name).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let p = v("a").add(&v("b")).unwrap().mul(&v("a").sub(&v("b")).unwrap()).unwrap();
        let expect = v("a").mul(&v("a")).unwrap().sub(&v("b").mul(&v("b")).unwrap()).unwrap();
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "a^2 - b^2");
    }

    #[test]
    fn derivative_of_a2b() {
        let f = v("a").mul(&v("a")).unwrap().mul(&v("b")).unwrap();
        let d = f.derivative("a").unwrap();
        let two = BigRational::from_integer(2.into());
        assert_eq!(d, v("a").mul(&v("b")).unwrap().scale(&two));
        assert!(f.derivative("z").is_err());
    }

    #[test]
    fn f_plus_neg_f_is_zero() {
        let f = v("a").mul(&v("b")).unwrap().add(&v("a")).unwrap();
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn alignment_merges_variables() {
        let a = E::var(&["a"], "a").unwrap();
        let b = E::var(&["b"], "b").unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.vars(), &["a".to_string(), "b".to_string()]);
        let ba = E::zero(&["b", "a"]);
        assert!(matches!(v("a").add(&ba), Err(Error::VariableOrder(_))));
    }
}
