//! An exact cubic in six variables built from the spanning-tree polynomial of
//! `K4`, and its Rayleigh difference `W`.
//!
//! The minor lift of `t_{K4}` is evaluated at a 6 × 6 symmetric matrix whose
//! rows and columns are the edges `12, 13, 14, 23, 24, 34` of `K4`; its
//! entries are the variables `x1, x2, x3, a, b, c`.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cones::{real_roots, TOL_IMAG};
use crate::error::{Error, Result};
use crate::poly::{Graph, SparsePoly};
use crate::rng;
use crate::scalar::Scalar;
use crate::{BigRational, ExactPoly};

/// Variable order used throughout, including serialized output.
pub const VARS: [&str; 6] = ["x1", "x2", "x3", "a", "b", "c"];

/// Direction of the hyperbolicity spot check: the identity specialization.
pub const DIRECTION: [f64; 6] = [1.0, 1.0, 1.0, 0.0, 0.0, 0.0];

fn var(name: &str) -> ExactPoly {
    ExactPoly::var(&VARS, name).expect("name is one of VARS")
}

fn int(c: i64) -> BigRational {
    BigRational::from_integer(c.into())
}

/// The symmetric matrix of polynomial entries:
/// `diag(x1, x2, x2, x2, x2, x3)` with the inner block on rows 2–5
/// having off-diagonal pattern `[[·,a,b,c],[a,·,c,b],[b,c,·,a],[c,b,a,·]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BorderedMatrix {
    entries: Vec<Vec<ExactPoly>>,
}

impl BorderedMatrix {
    pub fn new() -> Self {
        let zero = ExactPoly::zero(&VARS);
        let mut entries = vec![vec![zero; 6]; 6];
        entries[0][0] = var("x1");
        entries[5][5] = var("x3");
        let pattern = [
            [None, Some("a"), Some("b"), Some("c")],
            [Some("a"), None, Some("c"), Some("b")],
            [Some("b"), Some("c"), None, Some("a")],
            [Some("c"), Some("b"), Some("a"), None],
        ];
        for (i, row) in pattern.iter().enumerate() {
            for (j, name) in row.iter().enumerate() {
                entries[i + 1][j + 1] = var(name.unwrap_or("x2"));
            }
        }
        Self { entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> &ExactPoly {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..6).all(|i| (0..6).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Principal 3 × 3 minor on 0-based indices, by Laplace expansion along
    /// the first row.
    pub fn minor3(&self, idx: [usize; 3]) -> Result<ExactPoly> {
        let e = |r: usize, c: usize| &self.entries[idx[r]][idx[c]];
        let cof = |r1: usize, r2: usize, c1: usize, c2: usize| -> Result<ExactPoly> {
            e(r1, c1).mul(e(r2, c2))?.sub(&e(r1, c2).mul(e(r2, c1))?)
        };
        e(0, 0)
            .mul(&cof(1, 2, 1, 2)?)?
            .sub(&e(0, 1).mul(&cof(1, 2, 0, 2)?)?)?
            .add(&e(0, 2).mul(&cof(1, 2, 0, 1)?)?)
    }
}

impl Default for BorderedMatrix {
    fn default() -> Self {
        Self::new()
    }
}

/// The 16 spanning trees of `K4` as 0-based edge-index triples.
pub fn k4_spanning_trees() -> Vec<[usize; 3]> {
    let t = Graph::complete(4)
        .spanning_tree_poly::<BigRational>()
        .expect("K4 is connected");
    t.terms()
        .map(|(s, _)| {
            let p = s.positions();
            [p[0], p[1], p[2]]
        })
        .collect()
}

/// `p = Σ_τ det(A[τ, τ])` over spanning trees `τ` of `K4`.
pub fn build_p() -> ExactPoly {
    let a = BorderedMatrix::new();
    k4_spanning_trees()
        .into_iter()
        .try_fold(ExactPoly::zero(&VARS), |acc, tree| acc.add(&a.minor3(tree)?))
        .expect("all entries share the variable list")
}

/// `∂f/∂i · ∂f/∂j − f · ∂²f/∂i∂j`.
pub fn rayleigh_difference<T: Scalar>(f: &SparsePoly<T>, i: &str, j: &str) -> Result<SparsePoly<T>> {
    if i == j {
        return Err(Error::Parameter(format!("variables must differ, got {i} twice")));
    }
    let di = f.derivative(i)?;
    let dj = f.derivative(j)?;
    let dij = di.derivative(j)?;
    di.mul(&dj)?.sub(&f.mul(&dij)?)
}

/// `W = ∂p/∂x1 · ∂p/∂x3 − p · ∂²p/∂x1∂x3`.
pub fn w() -> ExactPoly {
    rayleigh_difference(&build_p(), "x1", "x3").expect("x1 and x3 are variables of p")
}

/// Monomials of `W / 4` in display order, with exponents over `VARS`.
pub const CLOSED_FORM: [([u32; 6], i64); 7] = [
    ([0, 0, 0, 2, 2, 0], 1),  // a^2 b^2
    ([0, 0, 0, 2, 0, 2], 1),  // a^2 c^2
    ([0, 0, 0, 0, 2, 2], 1),  // b^2 c^2
    ([0, 0, 0, 0, 0, 4], 1),  // c^4
    ([0, 1, 0, 1, 1, 1], -8), // a b c x2
    ([0, 2, 0, 2, 0, 0], 2),  // a^2 x2^2
    ([0, 2, 0, 0, 2, 0], 2),  // b^2 x2^2
];

/// `a²b² + a²c² + b²c² + c⁴ − 8abc·x2 + 2a²x2² + 2b²x2²`.
pub fn closed_form() -> ExactPoly {
    ExactPoly::from_terms(&VARS, CLOSED_FORM.iter().map(|(e, c)| (e.to_vec(), int(*c))))
        .expect("exponent vectors have six entries")
}

/// Coefficients of `W / 4` at the closed-form monomials, in display order.
pub fn closed_form_coefficients(w: &ExactPoly) -> Vec<BigRational> {
    let quarter = BigRational::new(1.into(), 4.into());
    CLOSED_FORM
        .iter()
        .map(|(e, _)| w.coeff(e) * quarter.clone())
        .collect()
}

/// `W / 4` equals the closed form exactly and `W` involves neither `x1` nor `x3`.
pub fn verify_w_identity() -> bool {
    let w = w();
    let quarter = BigRational::new(1.into(), 4.into());
    w.scale(&quarter) == closed_form()
        && !w.involves("x1").unwrap_or(true)
        && !w.involves("x3").unwrap_or(true)
}

/// `f` with the named variables set to zero.
pub fn vanish(f: &ExactPoly, names: &[&str]) -> Result<ExactPoly> {
    names
        .iter()
        .try_fold(f.clone(), |acc, n| acc.substitute(n, &BigRational::zero()))
}

/// Minimum of `W` (evaluated in floating point) over `trials` Gaussian points.
pub fn nonneg_sampling(w: &ExactPoly, trials: usize, seed: u64) -> Result<f64> {
    let wf: SparsePoly<f64> = w.map(|c| c.to_f64());
    let n = wf.vars().len();
    let values = (0..trials)
        .into_par_iter()
        .map(|i| wf.eval(&rng::normal_vec(&mut rng::sample_rng(seed, i as u64), n)))
        .collect::<Result<Vec<f64>>>()?;
    Ok(values.into_iter().fold(f64::INFINITY, f64::min))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperbolicityReport {
    pub trials: usize,
    pub failures: usize,
    /// Base point of the first line with a confirmed non-real root.
    pub witness: Option<Vec<f64>>,
}

impl HyperbolicityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Real-rootedness of `t ↦ p(v − t e)` for `e = (1, 1, 1, 0, 0, 0)` and
/// Gaussian `v`. Numerical failures are re-checked with an exact Sturm count.
pub fn hyperbolicity_spot_check(p: &ExactPoly, trials: usize, seed: u64) -> Result<HyperbolicityReport> {
    let pf: SparsePoly<f64> = p.map(|c| c.to_f64());
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|i| -> Result<Option<Vec<f64>>> {
            let v: Vec<f64> = rng::normal_vec(&mut rng::sample_rng(seed, i as u64), 6);
            let q = pf.restrict_line(&v, &DIRECTION)?;
            match real_roots(&q, TOL_IMAG) {
                Ok(_) => Ok(None),
                Err(Error::NotRealRooted) => {
                    let vq: Vec<BigRational> = v.iter().map(|x| BigRational::from_f64(*x)).collect();
                    let eq: Vec<BigRational> = DIRECTION.iter().map(|x| BigRational::from_f64(*x)).collect();
                    let exact = p.restrict_line(&vq, &eq)?;
                    Ok((!exact.is_real_rooted_exact()?).then_some(v))
                }
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let failures: Vec<Vec<f64>> = outcomes.into_iter().flatten().collect();
    Ok(HyperbolicityReport {
        trials,
        failures: failures.len(),
        witness: failures.into_iter().next(),
    })
}

/// `p` at the identity specialization `x1 = x2 = x3 = 1`, `a = b = c = 0`.
pub fn value_at_identity(p: &ExactPoly) -> Result<BigRational> {
    let mut point = vec![BigRational::one(); 3];
    point.extend(vec![BigRational::zero(); 3]);
    p.eval(&point)
}
