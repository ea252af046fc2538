//! The permutation walk: for stable homogeneous multiaffine `h` of degree `d`
//! and `v ∈ H(e_d)`, find `τ` with `τ(v) ∈ H(h)`.
//!
//! The walk rests on the group-algebra identity
//! `∏_{j=2}^{n} ∏_{i<j} (1 + e_{(i j)} / (j − i)) = Σ_{g ∈ S_n} g`.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::cones::{in_cone_vector, interlaces, sample_in_cone_vector, ConeReport, BOUNDARY_TOL};
use crate::error::{Error, Result};
use crate::poly::{MultiAffinePoly, Permutation};
use crate::rng;
use crate::scalar::Scalar;
use crate::BigRational;

/// One factor `1 + λ e_{(i j)}` with 1-based `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub i: usize,
    pub j: usize,
    pub weight: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSchedule {
    pub n: usize,
    /// Ordered by `j` ascending, then `i` ascending.
    pub factors: Vec<Factor>,
}

impl FactorSchedule {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter(format!("factorization needs n ≥ 2, got {n}")));
        }
        let factors = (2..=n)
            .flat_map(|j| {
                (1..j).map(move |i| Factor {
                    i,
                    j,
                    weight: BigRational::new(1.into(), ((j - i) as i64).into()),
                })
            })
            .collect();
        Ok(Self { n, factors })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The transposition of factor `k` (0-based).
    pub fn transposition(&self, k: usize) -> Permutation {
        let f = &self.factors[k];
        Permutation::transposition(self.n, f.i, f.j).expect("schedule indices lie in 1..=n")
    }
}

/// Lexicographic rank of a permutation through its Lehmer code.
pub fn lehmer_rank(p: &Permutation) -> usize {
    let img = p.images();
    let n = img.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = img[i + 1..].iter().filter(|&&x| x < img[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// Expands the ordered product of the schedule in exact group-algebra
/// arithmetic (dense over `S_n` by Lehmer rank) and returns the coefficients
/// indexed by rank.
pub fn expand_schedule(n: usize) -> Result<Vec<BigRational>> {
    if n > 6 {
        return Err(Error::Parameter(format!("group-algebra expansion supports n ≤ 6, got {n}")));
    }
    let schedule = FactorSchedule::new(n)?;
    let elements = Permutation::all(n);
    let mut acc = vec![BigRational::zero(); elements.len()];
    acc[0] = BigRational::one();
    for k in 0..schedule.len() {
        let tau = schedule.transposition(k);
        let w = &schedule.factors[k].weight;
        let mut next = acc.clone();
        for (g, c) in elements.iter().zip(&acc) {
            if !c.is_zero() {
                let r = lehmer_rank(&g.compose(&tau));
                next[r] = next[r].clone() + c.clone() * w.clone();
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Whether the ordered product equals `Σ_g g`, i.e. every coefficient is one.
pub fn verify_factorization(n: usize) -> Result<bool> {
    Ok(expand_schedule(n)?.iter().all(|c| c.is_one()))
}

/// `h_0 = h`, `h_k = h_{k−1} + λ_k τ_k(h_{k−1})`; the last polynomial is
/// checked to be a multiple of `e_d` (relative spread ≤ 1e−10).
pub fn build_h_chain(h: &MultiAffinePoly<f64>) -> Result<Vec<MultiAffinePoly<f64>>> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !h.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let schedule = FactorSchedule::new(h.n())?;
    let mut chain = Vec::with_capacity(schedule.len() + 1);
    chain.push(h.clone());
    for k in 0..schedule.len() {
        let prev = chain.last().expect("chain starts nonempty");
        let lambda = schedule.factors[k].weight.to_f64();
        let next = prev.add(&prev.apply_permutation(&schedule.transposition(k))?.scale(&lambda))?;
        chain.push(next);
    }
    let last = chain.last().expect("chain starts nonempty");
    if chain_spread(last) > 1e-10 {
        return Err(Error::Parameter("chain endpoint is not a multiple of e_d".into()));
    }
    Ok(chain)
}

/// Relative spread of the degree-`d` coefficients of `p` over all `d`-subsets.
pub fn chain_spread(p: &MultiAffinePoly<f64>) -> f64 {
    let d = p.degree();
    let coeffs: Vec<f64> = crate::poly::subset::k_subset_indices(p.n(), d)
        .iter()
        .map(|s| p.coeff_bits(s.iter().fold(0u32, |b, &i| b | (1 << i))))
        .collect();
    let hi = coeffs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = coeffs.iter().copied().fold(f64::INFINITY, f64::min);
    let scale = hi.abs().max(lo.abs());
    if scale == 0.0 {
        f64::INFINITY
    } else {
        (hi - lo) / scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepAction {
    Kept,
    Swapped,
    /// Neither `v` nor `τ_k(v)` was in the cone.
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WalkStep {
    /// 0-based index into the schedule.
    pub factor: usize,
    pub action: StepAction,
    /// Cone slack of the vector carried forward (or of `v` on failure).
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WalkTrace {
    pub steps: Vec<WalkStep>,
    /// Composition of the swaps, later swaps on the left.
    pub tau: Permutation,
    /// Membership of `τ(v)` in `H(h)`.
    pub final_report: Option<ConeReport>,
    pub success: bool,
}

fn closed_member(p: &MultiAffinePoly<f64>, v: &[f64], tol: f64) -> Result<ConeReport> {
    in_cone_vector(p, v, tol)
}

/// Walks `k = r, …, 1`: keeps `v` when `v ∈ H(h_{k−1})`, otherwise swaps by
/// `τ_k`. The final membership `τ(v) ∈ H(h)` is always re-checked.
pub fn permutation_walk(h: &MultiAffinePoly<f64>, v: &[f64], tol: f64) -> Result<WalkTrace> {
    let n = h.n();
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() });
    }
    let ed = MultiAffinePoly::elementary(n, h.degree())?;
    let start = closed_member(&ed, v, tol)?;
    if !start.verdict.in_closed_cone() {
        return Err(Error::OutsideCone { min_root: start.min_root });
    }
    let chain = build_h_chain(h)?;
    let schedule = FactorSchedule::new(n)?;
    let mut cur = v.to_vec();
    let mut tau = Permutation::identity(n);
    let mut steps = Vec::with_capacity(schedule.len());
    for k in (0..schedule.len()).rev() {
        let target = &chain[k];
        let keep = closed_member(target, &cur, tol)?;
        if keep.verdict.in_closed_cone() {
            steps.push(WalkStep { factor: k, action: StepAction::Kept, slack: keep.slack });
            continue;
        }
        let t = schedule.transposition(k);
        let swapped = t.apply(&cur)?;
        let rep = closed_member(target, &swapped, tol)?;
        if rep.verdict.in_closed_cone() {
            steps.push(WalkStep { factor: k, action: StepAction::Swapped, slack: rep.slack });
            cur = swapped;
            tau = t.compose(&tau);
        } else {
            steps.push(WalkStep { factor: k, action: StepAction::Failed, slack: keep.slack });
            return Ok(WalkTrace { steps, tau, final_report: None, success: false });
        }
    }
    let fin = closed_member(h, &tau.apply(v)?, tol)?;
    let success = fin.verdict.in_closed_cone();
    Ok(WalkTrace { steps, tau, final_report: Some(fin), success })
}

/// Recomposes the swaps recorded in a trace.
pub fn replay(trace: &WalkTrace, n: usize) -> Permutation {
    let schedule = FactorSchedule::new(n).expect("trace comes from a walk with n ≥ 2");
    trace
        .steps
        .iter()
        .filter(|s| s.action == StepAction::Swapped)
        .fold(Permutation::identity(n), |acc, s| schedule.transposition(s.factor).compose(&acc))
}

/// `(∂_i + ∂_j) h` interlaces both `h` and `τ(h)` for the transposition
/// `τ = (i j)` on random lines.
pub fn common_interlacer_check(h: &MultiAffinePoly<f64>, i: usize, j: usize, trials: usize, seed: u64) -> Result<bool> {
    let n = h.n();
    let tau = Permutation::transposition(n, i, j)?;
    let mut dir = vec![0.0; n];
    dir[i - 1] = 1.0;
    dir[j - 1] = 1.0;
    let g = h.directional_derivative(&dir)?;
    if g.is_zero() || g.degree() == 0 {
        return Ok(true);
    }
    let th = h.apply_permutation(&tau)?;
    Ok(interlaces(&g, h, trials, seed)?.holds && interlaces(&g, &th, trials, rng::derive_seed(seed, 1))?.holds)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransconeReport {
    pub samples: usize,
    pub violations: usize,
}

/// For each chain step, sampled points of `H(h_k)` lie in
/// `H(h_{k−1}) ∪ H(τ_k(h_{k−1}))`.
pub fn transcone_probe(h: &MultiAffinePoly<f64>, samples_per_step: usize, seed: u64) -> Result<TransconeReport> {
    let chain = build_h_chain(h)?;
    let schedule = FactorSchedule::new(h.n())?;
    let mut report = TransconeReport { samples: 0, violations: 0 };
    for k in 1..chain.len() {
        let prev = &chain[k - 1];
        let swapped = prev.apply_permutation(&schedule.transposition(k - 1))?;
        for s in 0..samples_per_step {
            let mut r = rng::sample_rng(seed, (k * samples_per_step + s) as u64);
            let margin = if s % 3 == 0 { 0.0 } else { r.random_range(0.0..0.5) };
            let v = sample_in_cone_vector(&chain[k], margin, &mut r)?;
            let ok = in_cone_vector(prev, &v, BOUNDARY_TOL)?.verdict.in_closed_cone()
                || in_cone_vector(&swapped, &v, BOUNDARY_TOL)?.verdict.in_closed_cone();
            report.samples += 1;
            if !ok {
                report.violations += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn schedule_examples() {
        let s = FactorSchedule::new(2).unwrap();
        assert_eq!((s.factors[0].i, s.factors[0].j), (1, 2));
        let s = FactorSchedule::new(3).unwrap();
        let got: Vec<(usize, usize, BigRational)> = s.factors.iter().map(|f| (f.i, f.j, f.weight.clone())).collect();
        assert_eq!(
            got,
            vec![(1, 2, ratio(1, 1)), (1, 3, ratio(1, 2)), (2, 3, ratio(1, 1))]
        );
        assert_eq!(FactorSchedule::new(5).unwrap().len(), 10);
        assert!(FactorSchedule::new(1).is_err());
    }

    #[test]
    fn lehmer_ranks_follow_lexicographic_order() {
        for (r, p) in Permutation::all(4).iter().enumerate() {
            assert_eq!(lehmer_rank(p), r);
        }
    }

    #[test]
    fn factorization_identity() {
        for n in 2..=5 {
            assert!(verify_factorization(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn chain_examples() {
        let h = MultiAffinePoly::monomial(3, &[1, 2]).unwrap();
        let chain = build_h_chain(&h).unwrap();
        assert_eq!(chain.len(), 4);
        let want = MultiAffinePoly::elementary(3, 2).unwrap().scale(&2.0);
        assert_eq!(chain[3], want);
        let e = MultiAffinePoly::elementary(4, 2).unwrap();
        for p in build_h_chain(&e).unwrap() {
            assert!(chain_spread(&p) < 1e-12);
        }
    }

    #[test]
    fn walk_examples() {
        let h = MultiAffinePoly::monomial(3, &[1, 2]).unwrap();
        let trace = permutation_walk(&h, &[-0.2, 1.0, 1.0], BOUNDARY_TOL).unwrap();
        assert!(trace.success);
        let w = trace.tau.apply(&[-0.2, 1.0, 1.0]).unwrap();
        assert_eq!(w[2], -0.2);
        assert_eq!(replay(&trace, 3), trace.tau);
        let t = permutation_walk(&h, &[1.0, 1.0, 1.0], BOUNDARY_TOL).unwrap();
        assert!(t.success && t.tau.is_identity());
        let e = MultiAffinePoly::elementary(3, 2).unwrap();
        let t = permutation_walk(&e, &[-0.2, 1.0, 1.0], BOUNDARY_TOL).unwrap();
        assert!(t.success && t.tau.is_identity());
        assert!(matches!(
            permutation_walk(&h, &[-1.0, 1.0, 1.0], BOUNDARY_TOL),
            Err(Error::OutsideCone { .. })
        ));
    }

    #[test]
    fn common_interlacer_examples() {
        let e2 = MultiAffinePoly::elementary(3, 2).unwrap();
        assert!(common_interlacer_check(&e2, 1, 2, 20, 1).unwrap());
        let h = MultiAffinePoly::monomial(3, &[1, 2]).unwrap();
        assert!(common_interlacer_check(&h, 2, 3, 20, 1).unwrap());
        let lin = MultiAffinePoly::linear(&[1.0, 2.0, 3.0]).unwrap();
        assert!(common_interlacer_check(&lin, 1, 3, 5, 1).unwrap());
    }

    #[test]
    fn transcone_probe_on_small_chain() {
        let h = MultiAffinePoly::monomial(3, &[1, 2]).unwrap();
        assert_eq!(transcone_probe(&h, 6, 3).unwrap().violations, 0);
    }
}
