//! Hyperbolicity-cone membership, real-rootedness and stability tests.
//!
//! Cones are taken with respect to the all-ones vector (vectors) or the
//! identity matrix (matrices). A point is inside when the smallest root of
//! its pencil exceeds the tolerance, on the boundary when that root is within
//! tolerance of zero, and outside otherwise.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minorlift::matrix_pencil_poly;
use crate::poly::{MultiAffinePoly, UniPoly};
use crate::rng;
use crate::scalar::Scalar;
use crate::symmat::SymMatrix;
use crate::BigRational;

pub use crate::roots::real_roots;

/// Imaginary-part tolerance for real-rootedness, relative to `1 + |z|`.
pub const TOL_IMAG: f64 = 1e-7;
/// Cone tolerance, relative to `1 + max|root|`.
pub const CONE_TOL: f64 = 1e-8;
/// Cone tolerance for boundary-tolerant steps.
pub const BOUNDARY_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Inside,
    Boundary,
    Outside,
    /// The pencil was not real-rooted, so no cone statement is possible.
    Inconclusive,
}

impl Verdict {
    /// Inside or on the boundary.
    pub fn in_closed_cone(self) -> bool {
        matches!(self, Verdict::Inside | Verdict::Boundary)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConeReport {
    pub verdict: Verdict,
    /// Ascending pencil roots.
    pub roots: Vec<f64>,
    /// Smallest root; `+∞` when the pencil is a nonzero constant.
    #[serde(skip)]
    pub min_root: f64,
    /// Equal to `min_root` (positive means strictly inside).
    pub slack: f64,
    pub tolerance: f64,
}

impl ConeReport {
    /// Classifies sorted pencil roots with tolerance `tol (1 + max|root|)`.
    pub fn from_roots(roots: Vec<f64>, tol: f64) -> Self {
        let scale = roots.iter().fold(0.0f64, |m, r| m.max(r.abs()));
        let tolerance = tol * (1.0 + scale);
        let min_root = roots.first().copied().unwrap_or(f64::INFINITY);
        let verdict = if min_root > tolerance {
            Verdict::Inside
        } else if min_root.abs() <= tolerance {
            Verdict::Boundary
        } else {
            Verdict::Outside
        };
        Self {
            verdict,
            roots,
            min_root,
            slack: min_root,
            tolerance,
        }
    }

    fn inconclusive(tol: f64) -> Self {
        Self {
            verdict: Verdict::Inconclusive,
            roots: Vec::new(),
            min_root: f64::NAN,
            slack: f64::NAN,
            tolerance: tol,
        }
    }

    /// Report for a univariate pencil `t ↦ q(t)`.
    pub fn from_pencil(q: &UniPoly<f64>, tol: f64) -> Result<Self> {
        match real_roots(q, TOL_IMAG) {
            Ok(roots) => Ok(Self::from_roots(roots, tol)),
            Err(Error::NotRealRooted) => Ok(Self::inconclusive(tol)),
            Err(e) => Err(e),
        }
    }
}

fn check_direction(p: &MultiAffinePoly<f64>) -> Result<()> {
    let d = p.degree();
    let top: f64 = p
        .raw_terms()
        .filter(|(b, _)| b.count_ones() as usize == d)
        .map(|(_, c)| *c)
        .sum();
    let scale = p.raw_terms().fold(0.0f64, |m, (_, c)| m.max(c.abs()));
    if p.is_zero() || top.abs() <= 1e-12 * scale {
        Err(Error::DegenerateDirection)
    } else {
        Ok(())
    }
}

/// Membership of `v` in `H(p)` via the roots of `t ↦ p(v − t·1)`.
pub fn in_cone_vector(p: &MultiAffinePoly<f64>, v: &[f64], tol: f64) -> Result<ConeReport> {
    check_direction(p)?;
    let q = p.restrict_line(v, &vec![1.0; p.n()])?;
    ConeReport::from_pencil(&q, tol)
}

/// Membership of `A` in `H(P)` via the roots of `t ↦ P(A − tI)`.
pub fn in_cone_matrix(p: &MultiAffinePoly<f64>, a: &SymMatrix<f64>, tol: f64) -> Result<ConeReport> {
    check_direction(p)?;
    let q = matrix_pencil_poly(p, a)?;
    ConeReport::from_pencil(&q, tol)
}

/// Certificate that a polynomial is not stable.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StabilityWitness {
    /// Nonzero coefficients of both signs.
    MixedSigns,
    /// `t ↦ p(v − t a)` with `a > 0` has a non-real root, confirmed by an
    /// exact Sturm count on the rational line.
    Line { v: Vec<f64>, a: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Stability {
    EvidenceStable { trials: usize },
    NotStable { witness: StabilityWitness },
}

impl Stability {
    pub fn is_evidence_stable(&self) -> bool {
        matches!(self, Stability::EvidenceStable { .. })
    }
}

/// Rounds to a dyadic rational with 24 fractional bits so exact checks stay small.
fn dyadic(x: f64) -> f64 {
    (x * 16_777_216.0).round() / 16_777_216.0
}

/// Whether `t ↦ p(v − t a)` is real-rooted, decided in exact arithmetic.
pub fn line_is_real_rooted_exact(p: &MultiAffinePoly<f64>, v: &[f64], a: &[f64]) -> Result<bool> {
    let pq: MultiAffinePoly<BigRational> = p.map(|c| BigRational::from_f64(*c));
    let vq: Vec<BigRational> = v.iter().map(|x| BigRational::from_f64(*x)).collect();
    let aq: Vec<BigRational> = a.iter().map(|x| BigRational::from_f64(*x)).collect();
    pq.restrict_line(&vq, &aq)?.is_real_rooted_exact()
}

/// One-sided stability test: mixed coefficient signs reject immediately,
/// otherwise `trials` random lines `v − t a` (`v` Gaussian, `a` log-normal
/// positive) must all be real-rooted. Numerical failures are only reported
/// after exact confirmation.
pub fn is_stable_probabilistic(p: &MultiAffinePoly<f64>, trials: usize, seed: u64) -> Result<Stability> {
    if p.common_sign().is_none() {
        return Ok(if p.is_zero() {
            Stability::EvidenceStable { trials: 0 }
        } else {
            Stability::NotStable {
                witness: StabilityWitness::MixedSigns,
            }
        });
    }
    for i in 0..trials {
        let mut r = rng::sample_rng(seed, i as u64);
        let v: Vec<f64> = rng::normal_vec(&mut r, p.n()).into_iter().map(dyadic).collect();
        let a: Vec<f64> = rng::positive_vec(&mut r, p.n(), 0.5).into_iter().map(dyadic).collect();
        let q = p.restrict_line(&v, &a)?;
        if q.is_zero() {
            continue;
        }
        if let Err(Error::NotRealRooted) = real_roots(&q, TOL_IMAG) {
            if !line_is_real_rooted_exact(p, &v, &a)? {
                return Ok(Stability::NotStable {
                    witness: StabilityWitness::Line { v, a },
                });
            }
        }
    }
    Ok(Stability::EvidenceStable { trials })
}

/// Weak interlacing of ascending `inner` (length `d − 1`) within ascending
/// `outer` (length `d`): `outer[i] ≤ inner[i] ≤ outer[i + 1]` up to
/// `tol (1 + max|root|)`.
pub fn roots_interlace(inner: &[f64], outer: &[f64], tol: f64) -> bool {
    if inner.len() + 1 != outer.len() {
        return false;
    }
    let scale = inner.iter().chain(outer).fold(0.0f64, |m, r| m.max(r.abs()));
    let slack = tol * (1.0 + scale);
    inner
        .iter()
        .enumerate()
        .all(|(i, r)| outer[i] - slack <= *r && *r <= outer[i + 1] + slack)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlaceReport {
    pub holds: bool,
    pub lines_tested: usize,
    /// Line base point of the first failure, if any.
    pub witness: Option<Vec<f64>>,
}

fn check_interlace_degrees(q: &MultiAffinePoly<f64>, p: &MultiAffinePoly<f64>) -> Result<()> {
    if q.n() != p.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            got: q.n(),
        });
    }
    if q.degree() + 1 != p.degree() {
        return Err(Error::DegreeMismatch {
            expected: p.degree().saturating_sub(1),
            got: q.degree(),
        });
    }
    Ok(())
}

/// Whether the roots of `q(v − t·1)` interlace those of `p(v − t·1)`.
pub fn interlaces_at(q: &MultiAffinePoly<f64>, p: &MultiAffinePoly<f64>, v: &[f64]) -> Result<bool> {
    check_interlace_degrees(q, p)?;
    let ones = vec![1.0; p.n()];
    pencils_interlace(&q.restrict_line(v, &ones)?, &p.restrict_line(v, &ones)?)
}

fn pencils_interlace(qq: &UniPoly<f64>, pp: &UniPoly<f64>) -> Result<bool> {
    if qq.is_zero() {
        return Ok(true);
    }
    match (real_roots(qq, TOL_IMAG), real_roots(pp, TOL_IMAG)) {
        (Ok(r), Ok(s)) => Ok(r.len() + 1 != s.len() || roots_interlace(&r, &s, CONE_TOL)),
        (Err(Error::NotRealRooted), _) | (_, Err(Error::NotRealRooted)) => Ok(false),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

/// Interlacing of `q` in `p` on `trials` random lines `v − t·1`.
pub fn interlaces(q: &MultiAffinePoly<f64>, p: &MultiAffinePoly<f64>, trials: usize, seed: u64) -> Result<InterlaceReport> {
    check_interlace_degrees(q, p)?;
    for i in 0..trials {
        let v = rng::normal_vec(&mut rng::sample_rng(seed, i as u64), p.n());
        if !interlaces_at(q, p, &v)? {
            return Ok(InterlaceReport {
                holds: false,
                lines_tested: i + 1,
                witness: Some(v),
            });
        }
    }
    Ok(InterlaceReport {
        holds: true,
        lines_tested: trials,
        witness: None,
    })
}

/// Matrix version: pencils `Q(A − tI)` and `P(A − tI)` on random symmetric `A`.
pub fn interlaces_matrix(q: &MultiAffinePoly<f64>, p: &MultiAffinePoly<f64>, trials: usize, seed: u64) -> Result<InterlaceReport> {
    check_interlace_degrees(q, p)?;
    for i in 0..trials {
        let a = SymMatrix::random_with(p.n(), &mut rng::sample_rng(seed, i as u64));
        if !pencils_interlace(&matrix_pencil_poly(q, &a)?, &matrix_pencil_poly(p, &a)?)? {
            return Ok(InterlaceReport {
                holds: false,
                lines_tested: i + 1,
                witness: Some(a.rows().concat()),
            });
        }
    }
    Ok(InterlaceReport {
        holds: true,
        lines_tested: trials,
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RenegarReport {
    pub samples: usize,
    pub violations: usize,
    /// Smallest pencil root of `D_1 p` over the sampled points.
    pub min_slack: f64,
}

/// `H(p) ⊆ H(D_1 p)`: samples points of `H(p)` (interior and boundary) and
/// checks each lies in the closed cone of the directional derivative.
pub fn renegar_nesting_check(p: &MultiAffinePoly<f64>, samples: usize, seed: u64) -> Result<RenegarReport> {
    let dp = p.directional_derivative(&vec![1.0; p.n()])?;
    let mut report = RenegarReport {
        samples,
        violations: 0,
        min_slack: f64::INFINITY,
    };
    if dp.degree() == 0 {
        return Ok(report);
    }
    for i in 0..samples {
        let mut r = rng::sample_rng(seed, i as u64);
        let margin = if i % 4 == 0 { 0.0 } else { r.random_range(0.0..0.5) };
        let v = sample_in_cone_vector(p, margin, &mut r)?;
        let rep = in_cone_vector(&dp, &v, CONE_TOL)?;
        report.min_slack = report.min_slack.min(rep.slack);
        if !rep.verdict.in_closed_cone() {
            report.violations += 1;
        }
    }
    Ok(report)
}

fn pencil_min_root(q: &UniPoly<f64>) -> Result<f64> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(real_roots(q, TOL_IMAG)?.first().copied().unwrap_or(0.0))
}

fn shift_for(m: f64, margin: f64) -> f64 {
    -m + margin * (1.0 + m.abs())
}

/// A point of `H(p)`: Gaussian `g` shifted along `1` so that the smallest
/// pencil root becomes `margin (1 + |m|)`, with `m` the root before shifting.
/// `margin = 0` targets the boundary.
pub fn sample_in_cone_vector(p: &MultiAffinePoly<f64>, margin: f64, rng: &mut impl Rng) -> Result<Vec<f64>> {
    let g = rng::normal_vec(rng, p.n());
    let m = pencil_min_root(&p.restrict_line(&g, &vec![1.0; p.n()])?)?;
    let s = shift_for(m, margin);
    Ok(g.into_iter().map(|x| x + s).collect())
}

/// Matrix analogue of [`sample_in_cone_vector`]: a random symmetric matrix
/// shifted along the identity. Never conjugated.
pub fn sample_in_cone_matrix(p: &MultiAffinePoly<f64>, margin: f64, rng: &mut impl Rng) -> Result<SymMatrix<f64>> {
    let g = SymMatrix::random_with(p.n(), rng);
    let m = pencil_min_root(&matrix_pencil_poly(p, &g)?)?;
    Ok(g.shift(&shift_for(m, margin)))
}
