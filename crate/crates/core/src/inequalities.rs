//! Verifiers for the inequalities satisfied on the hyperbolicity cone of a
//! minor lift: Fischer–Hadamard, its diagonal and segment corollaries, the
//! projection lemma, Koteljanskii and the nonnegative lattice condition.
//!
//! Every check first confirms `A ∈ H(P)`; a point outside the cone yields
//! [`Error::OutsideCone`], which callers must keep apart from violations.

use serde::Serialize;

use crate::cones::{in_cone_matrix, in_cone_vector, ConeReport, Verdict, CONE_TOL};
use crate::error::{Error, Result};
use crate::minorlift::{diagonal_shift_poly, minor_lift_eval, restricted_value};
use crate::poly::{MultiAffinePoly, SubsetMask};
use crate::symmat::{Partition, SymMatrix};

/// Absolute and relative slack allowances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs: 1e-10, rel: 1e-9 }
    }
}

impl Tolerance {
    pub fn allows(&self, slack: f64, scale: f64) -> bool {
        slack >= -self.abs - self.rel * scale
    }
}

/// `lhs ≥ rhs` up to tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityRecord {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub verdict: bool,
    pub context: String,
}

impl InequalityRecord {
    pub fn new(lhs: f64, rhs: f64, tol: Tolerance, context: impl Into<String>) -> Self {
        let slack = lhs - rhs;
        Self {
            lhs,
            rhs,
            slack,
            verdict: tol.allows(slack, lhs.abs().max(rhs.abs())),
            context: context.into(),
        }
    }

    /// `slack / (1 + max(|lhs|, |rhs|))`.
    pub fn relative_slack(&self) -> f64 {
        self.slack / (1.0 + self.lhs.abs().max(self.rhs.abs()))
    }
}

/// Confirms `A` lies in the closed cone `H(P)`.
pub fn require_in_cone(p: &MultiAffinePoly<f64>, a: &SymMatrix<f64>) -> Result<ConeReport> {
    let report = in_cone_matrix(p, a, CONE_TOL)?;
    if report.verdict.in_closed_cone() {
        Ok(report)
    } else {
        Err(Error::OutsideCone {
            min_root: report.min_root,
        })
    }
}

/// `P(π_Π(A)) ≥ P(A)`.
pub fn check_fischer_hadamard(
    p: &MultiAffinePoly<f64>,
    a: &SymMatrix<f64>,
    partition: &Partition,
    tol: Tolerance,
) -> Result<InequalityRecord> {
    require_in_cone(p, a)?;
    let lhs = minor_lift_eval(p, &a.block_project(partition)?)?;
    let rhs = minor_lift_eval(p, a)?;
    Ok(InequalityRecord::new(lhs, rhs, tol, format!("partition={:?}", partition.blocks())))
}

/// Cone verdict for `π_Π(A)`, which should be inside or on the boundary.
pub fn check_projection_lemma(p: &MultiAffinePoly<f64>, a: &SymMatrix<f64>, partition: &Partition) -> Result<ConeReport> {
    require_in_cone(p, a)?;
    in_cone_matrix(p, &a.block_project(partition)?, CONE_TOL)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagCorollary {
    pub record: InequalityRecord,
    /// Membership of the diagonal of `A` in `H(p)`.
    pub diagonal_cone: ConeReport,
}

impl DiagCorollary {
    pub fn holds(&self) -> bool {
        self.record.verdict && self.diagonal_cone.verdict.in_closed_cone()
    }
}

/// `p(diag A) ≥ P(A)`, together with `diag A ∈ H(p)`.
pub fn check_diag_corollary(p: &MultiAffinePoly<f64>, a: &SymMatrix<f64>, tol: Tolerance) -> Result<DiagCorollary> {
    require_in_cone(p, a)?;
    let diag = a.diagonal();
    let lhs = p.eval(&diag)?;
    let rhs = minor_lift_eval(p, a)?;
    Ok(DiagCorollary {
        record: InequalityRecord::new(lhs, rhs, tol, "diagonal"),
        diagonal_cone: in_cone_vector(p, &diag, CONE_TOL)?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneReport {
    /// `g(t_i)` on the uniform grid of `[0, 1]`.
    pub values: Vec<f64>,
    /// Smallest forward difference.
    pub min_step: f64,
    pub holds: bool,
}

impl MonotoneReport {
    pub fn start(&self) -> f64 {
        self.values[0]
    }

    pub fn end(&self) -> f64 {
        *self.values.last().expect("grid has at least two points")
    }
}

pub const DEFAULT_GRID_POINTS: usize = 101;

/// `g(t) = P((1 − t) A + t π_Π(A))` is nondecreasing on `[0, 1]`.
pub fn check_monotone_segment(
    p: &MultiAffinePoly<f64>,
    a: &SymMatrix<f64>,
    partition: &Partition,
    grid_points: usize,
    tol: Tolerance,
) -> Result<MonotoneReport> {
    if grid_points < 2 {
        return Err(Error::Parameter(format!("grid needs two points, got {grid_points}")));
    }
    require_in_cone(p, a)?;
    let b = a.block_project(partition)?;
    let values = (0..grid_points)
        .map(|i| {
            let t = i as f64 / (grid_points - 1) as f64;
            minor_lift_eval(p, &a.lerp(&b, &t)?)
        })
        .collect::<Result<Vec<f64>>>()?;
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let min_step = values.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    Ok(MonotoneReport {
        holds: tol.allows(min_step, scale),
        values,
        min_step,
    })
}

/// `P|_S(A) P|_T(A) ≥ P|_{S∪T}(A) P|_{S∩T}(A)`.
pub fn check_koteljanskii(
    p: &MultiAffinePoly<f64>,
    a: &SymMatrix<f64>,
    s: &SubsetMask,
    t: &SubsetMask,
    tol: Tolerance,
) -> Result<InequalityRecord> {
    require_in_cone(p, a)?;
    koteljanskii_unchecked(p, a, s, t, tol)
}

fn koteljanskii_unchecked(
    p: &MultiAffinePoly<f64>,
    a: &SymMatrix<f64>,
    s: &SubsetMask,
    t: &SubsetMask,
    tol: Tolerance,
) -> Result<InequalityRecord> {
    let lhs = restricted_value(p, s, a)? * restricted_value(p, t, a)?;
    let rhs = restricted_value(p, &s.union(t), a)? * restricted_value(p, &s.intersection(t), a)?;
    Ok(InequalityRecord::new(lhs, rhs, tol, format!("S={s} T={t}")))
}

/// Koteljanskii over every pair `S, T` with a well-defined intersection
/// restriction; pairs are unordered and comparable pairs (equalities) are skipped.
pub fn check_koteljanskii_all(p: &MultiAffinePoly<f64>, a: &SymMatrix<f64>, tol: Tolerance) -> Result<Vec<InequalityRecord>> {
    require_in_cone(p, a)?;
    let n = p.n();
    let need = n.saturating_sub(p.degree());
    let mut out = Vec::new();
    for (s, t) in incomparable_pairs(n) {
        if (s & t).count_ones() as usize >= need {
            out.push(koteljanskii_unchecked(p, a, &SubsetMask::new(n, s)?, &SubsetMask::new(n, t)?, tol)?);
        }
    }
    Ok(out)
}

/// Unordered pairs `(S, T)`, `S < T` as bitmasks, with neither contained in the other.
fn incomparable_pairs(n: usize) -> impl Iterator<Item = (u32, u32)> {
    let count = 1u32 << n;
    (0..count).flat_map(move |s| {
        (s + 1..count)
            .filter(move |&t| s & t != s && s & t != t)
            .map(move |t| (s, t))
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NlcReport {
    /// `P_A(x) = P(A + Diag(x))`; the coefficient of `x^K` is `P|_{[n]∖K}(A)`.
    pub coefficients: Vec<(SubsetMask, f64)>,
    pub min_coefficient: f64,
    pub coefficients_nonnegative: bool,
    pub lattice: Vec<InequalityRecord>,
}

impl NlcReport {
    pub fn holds(&self) -> bool {
        self.coefficients_nonnegative && self.lattice.iter().all(|r| r.verdict)
    }
}

/// The nonnegative lattice condition for `P_A`: all coefficients `c_K ≥ 0`
/// and `c_K c_L ≥ c_{K∪L} c_{K∩L}` for every incomparable pair.
pub fn check_nlc_battery(p: &MultiAffinePoly<f64>, a: &SymMatrix<f64>, tol: Tolerance) -> Result<NlcReport> {
    if p.n() > 8 {
        return Err(Error::Parameter(format!("lattice battery supports n ≤ 8, got {}", p.n())));
    }
    require_in_cone(p, a)?;
    let n = p.n();
    let pa = diagonal_shift_poly(p, a)?;
    let c: Vec<f64> = (0..1u32 << n).map(|b| pa.coeff_bits(b)).collect();
    let scale = c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let min_coefficient = c.iter().copied().fold(f64::INFINITY, f64::min);
    let lattice = incomparable_pairs(n)
        .map(|(k, l)| {
            InequalityRecord::new(
                c[k as usize] * c[l as usize],
                c[(k | l) as usize] * c[(k & l) as usize],
                tol,
                format!("K={} L={}", mask(n, k), mask(n, l)),
            )
        })
        .collect();
    Ok(NlcReport {
        coefficients: (0..1u32 << n).map(|b| (mask(n, b), c[b as usize])).collect(),
        min_coefficient,
        coefficients_nonnegative: min_coefficient >= -tol.abs - tol.rel * scale,
        lattice,
    })
}

fn mask(n: usize, bits: u32) -> SubsetMask {
    SubsetMask::new(n, bits).expect("bits drawn below 2^n")
}

/// Verdicts that count as success for a projected point.
pub fn projection_ok(report: &ConeReport) -> bool {
    matches!(report.verdict, Verdict::Inside | Verdict::Boundary)
}
