//! Eigenvalue questions for minor lifts: spectral containment, the
//! Schur–Horn gap over the orthogonal group, derivation matrices and
//! majorization of pencil roots.

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use crate::cones::{in_cone_vector, real_roots, ConeReport, CONE_TOL, TOL_IMAG};
use crate::error::{Error, Result};
use crate::inequalities::require_in_cone;
use crate::linalg::Dense;
use crate::minorlift::{elementary_value, matrix_pencil_poly, minor_lift_eval};
use crate::poly::perm::next_permutation;
use crate::poly::subset::k_subset_indices;
use crate::poly::{MultiAffinePoly, Permutation, SubsetMask};
use crate::rng;
use crate::scalar::Scalar;
use crate::symmat::{random_orthogonal_with, SymMatrix};

/// Eigenvalues closer than this (relative to `1 + max|λ|`) are treated as equal
/// when enumerating arrangements.
const DUPLICATE_TOL: f64 = 1e-10;
/// Largest `n` searched exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 9;

/// Distinct arrangements of `values`: each item lists, slot by slot, the index
/// of the value placed there. Values equal up to the duplicate tolerance are
/// interchangeable, so each multiset arrangement appears once.
pub fn distinct_arrangements(values: &[f64]) -> impl Iterator<Item = Vec<usize>> {
    let scale = 1.0 + values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut class = vec![0usize; values.len()];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        if pos == 0 || values[i] - values[order[pos - 1]] > DUPLICATE_TOL * scale {
            members.push(Vec::new());
        }
        class[i] = members.len() - 1;
        members.last_mut().expect("pushed above").push(i);
    }
    let mut labels: Vec<usize> = order.iter().map(|&i| class[i]).collect();
    let mut first = true;
    std::iter::from_fn(move || {
        if !first && !next_permutation(&mut labels) {
            return None;
        }
        first = false;
        let mut next = vec![0usize; members.len()];
        Some(
            labels
                .iter()
                .map(|&c| {
                    let i = members[c][next[c]];
                    next[c] += 1;
                    i
                })
                .collect(),
        )
    })
}

/// The permutation `τ` with `τ(λ) = w` where `w[j] = λ[slots[j]]`.
fn arrangement_permutation(slots: &[usize]) -> Permutation {
    let mut images = vec![0; slots.len()];
    for (j, &i) in slots.iter().enumerate() {
        images[i] = j;
    }
    Permutation::from_images(images).expect("slots form a permutation")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    /// Ascending eigenvalues of `A`.
    pub eigenvalues: Vec<f64>,
    /// `τ` with `τ(λ) ∈ H(p)`, if one was found.
    pub found_permutation: Option<Permutation>,
    pub cone_report: Option<ConeReport>,
    pub permutations_tested: usize,
    pub exhaustive: bool,
    /// Whether the find needed the loosened re-test tolerance.
    pub retested: bool,
    /// An exhaustive failure that survived re-verification: `A` is inside
    /// `H(P)` at a tightened tolerance and no arrangement is in `H(p)` even at
    /// a loosened one.
    pub confirmed_failure: bool,
}

impl SpectralResult {
    pub fn found(&self) -> bool {
        self.found_permutation.is_some()
    }
}

fn search_arrangements(
    p: &MultiAffinePoly<f64>,
    lambda: &[f64],
    candidates: impl Iterator<Item = Vec<usize>>,
    tol: f64,
) -> Result<(Option<(Permutation, ConeReport)>, usize)> {
    let mut tested = 0;
    for slots in candidates {
        tested += 1;
        let w: Vec<f64> = slots.iter().map(|&i| lambda[i]).collect();
        let report = in_cone_vector(p, &w, tol)?;
        if report.verdict.in_closed_cone() {
            return Ok((Some((arrangement_permutation(&slots), report)), tested));
        }
    }
    Ok((None, tested))
}

/// Looks for an arrangement of the eigenvalues of `A ∈ H(P)` inside `H(p)`.
/// Exhaustive for `n ≤ 9`; otherwise ascending, descending and `max_perms`
/// random arrangements.
pub fn spectral_containment_search(
    p: &MultiAffinePoly<f64>,
    a: &SymMatrix<f64>,
    tol: f64,
    max_perms: usize,
    seed: u64,
) -> Result<SpectralResult> {
    require_in_cone(p, a)?;
    let lambda = a.eigenvalues()?;
    let n = lambda.len();
    let exhaustive = n <= EXHAUSTIVE_LIMIT;
    let candidates = |tol: f64| -> Result<(Option<(Permutation, ConeReport)>, usize)> {
        if exhaustive {
            search_arrangements(p, &lambda, distinct_arrangements(&lambda), tol)
        } else {
            let mut r = rng::rng_from_seed(seed);
            let asc: Vec<usize> = (0..n).collect();
            let desc: Vec<usize> = (0..n).rev().collect();
            let random = (0..max_perms).map(move |_| {
                let mut v: Vec<usize> = (0..n).collect();
                v.shuffle(&mut r);
                v
            });
            search_arrangements(p, &lambda, [asc, desc].into_iter().chain(random), tol)
        }
    };
    let (found, mut tested) = candidates(tol)?;
    let mut result = SpectralResult {
        eigenvalues: lambda.clone(),
        found_permutation: None,
        cone_report: None,
        permutations_tested: tested,
        exhaustive,
        retested: false,
        confirmed_failure: false,
    };
    if let Some((perm, report)) = found {
        result.found_permutation = Some(perm);
        result.cone_report = Some(report);
        return Ok(result);
    }
    // Re-verification before anything is called a failure.
    let (loose, more) = candidates(tol * 100.0)?;
    tested += more;
    result.permutations_tested = tested;
    result.retested = true;
    if let Some((perm, report)) = loose {
        result.found_permutation = Some(perm);
        result.cone_report = Some(report);
        return Ok(result);
    }
    let strict = crate::cones::in_cone_matrix(p, a, tol / 100.0)?;
    result.confirmed_failure = exhaustive && strict.verdict.in_closed_cone();
    Ok(result)
}

/// `max_π p(π(λ))` over distinct arrangements of `λ`.
pub fn perm_max(p: &MultiAffinePoly<f64>, lambda: &[f64]) -> Result<(f64, Vec<usize>)> {
    let mut best = (f64::NEG_INFINITY, Vec::new());
    for slots in distinct_arrangements(lambda) {
        let w: Vec<f64> = slots.iter().map(|&i| lambda[i]).collect();
        let v = p.eval(&w)?;
        if v > best.0 {
            best = (v, slots);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchurHornResult {
    pub perm_max: f64,
    /// Best `P(U X Uᵀ)` found, including the eigenbasis start; a lower bound for
    /// the maximum over the orthogonal group.
    pub orth_max_lower_bound: f64,
    /// Best value reached from random orthogonal starts alone.
    pub search_max: f64,
    /// The `U` attaining `orth_max_lower_bound`, row-major.
    pub maximizer: Vec<Vec<f64>>,
}

const ANGLE_SAMPLES: usize = 48;
const GOLDEN_STEPS: usize = 40;

fn rotate(m: &SymMatrix<f64>, i: usize, j: usize, theta: f64) -> SymMatrix<f64> {
    let (s, c) = theta.sin_cos();
    let n = m.n();
    // rows/cols i, j of R M Rᵀ with R e_i = c e_i + s e_j, R e_j = -s e_i + c e_j
    let row = |r: usize, k: usize| -> f64 {
        if r == i {
            c * m.get(i, k) - s * m.get(j, k)
        } else if r == j {
            s * m.get(i, k) + c * m.get(j, k)
        } else {
            *m.get(r, k)
        }
    };
    SymMatrix::from_fn(n, |a, b| {
        if b == i {
            c * row(a, i) - s * row(a, j)
        } else if b == j {
            s * row(a, i) + c * row(a, j)
        } else {
            row(a, b)
        }
    })
}

fn rotate_rows(u: &mut Dense<f64>, i: usize, j: usize, theta: f64) {
    let (s, c) = theta.sin_cos();
    for k in 0..u.cols() {
        let (ui, uj) = (*u.get(i, k), *u.get(j, k));
        u.set(i, k, c * ui - s * uj);
        u.set(j, k, s * ui + c * uj);
    }
}

/// Best angle in `(−π/2, π/2]` for the plane `(i, j)`: dense sampling, then
/// golden-section refinement around the best sample.
fn line_search(p: &MultiAffinePoly<f64>, m: &SymMatrix<f64>, i: usize, j: usize) -> Result<(f64, f64)> {
    let f = |t: f64| minor_lift_eval(p, &rotate(m, i, j, t));
    let h = std::f64::consts::PI / ANGLE_SAMPLES as f64;
    let mut best = (0.0, f(0.0)?);
    for k in 0..ANGLE_SAMPLES {
        let t = -std::f64::consts::FRAC_PI_2 + h * (k + 1) as f64;
        let v = f(t)?;
        if v > best.1 {
            best = (t, v);
        }
    }
    let (mut lo, mut hi) = (best.0 - h, best.0 + h);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut x1, mut x2) = (hi - g * (hi - lo), lo + g * (hi - lo));
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    for _ in 0..GOLDEN_STEPS {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1)?;
        }
    }
    for (t, v) in [(x1, f1), (x2, f2)] {
        if v > best.1 {
            best = (t, v);
        }
    }
    Ok(best)
}

/// Coordinate ascent over Givens rotations from `U`, at most `sweeps` sweeps.
fn ascend(p: &MultiAffinePoly<f64>, x: &SymMatrix<f64>, mut u: Dense<f64>, sweeps: usize) -> Result<(f64, Dense<f64>)> {
    let n = x.n();
    let mut m = x.conjugate(&u)?;
    let mut value = minor_lift_eval(p, &m)?;
    for _ in 0..sweeps {
        let before = value;
        for i in 0..n {
            for j in i + 1..n {
                let (theta, v) = line_search(p, &m, i, j)?;
                if v > value {
                    m = rotate(&m, i, j, theta);
                    rotate_rows(&mut u, i, j, theta);
                    value = v;
                }
            }
        }
        if value - before <= 1e-13 * (1.0 + value.abs()) {
            break;
        }
    }
    // Re-evaluate from U to shed drift in the rotated copy.
    Ok((minor_lift_eval(p, &x.conjugate(&u)?)?, u))
}

/// Compares `max_π p(π(λ))` with a heuristic maximum of `P(U X Uᵀ)` over
/// orthogonal `U`: Givens coordinate ascent from `restarts` random starts
/// plus one start at the eigenbasis arranged by the best permutation.
pub fn schur_horn_gap(p: &MultiAffinePoly<f64>, x: &SymMatrix<f64>, restarts: usize, iters: usize, seed: u64) -> Result<SchurHornResult> {
    if x.n() != p.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            got: x.n(),
        });
    }
    let n = x.n();
    let (vals, vecs) = x.eigh()?;
    let (pmax, slots) = perm_max(p, &vals)?;
    // U = Π Vᵀ puts λ[slots[j]] at diagonal slot j.
    let start = Dense::from_fn(n, n, |r, c| *vecs.get(c, slots[r]));
    let searches = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let u0 = random_orthogonal_with(n, &mut rng::sample_rng(seed, r as u64));
            ascend(p, x, u0, iters)
        })
        .collect::<Result<Vec<_>>>()?;
    let anchored = ascend(p, x, start, iters)?;
    let search_best = searches
        .iter()
        .map(|(v, _)| *v)
        .fold(f64::NEG_INFINITY, f64::max);
    let (best, u) = searches
        .into_iter()
        .chain(std::iter::once(anchored))
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .expect("anchored start always present");
    Ok(SchurHornResult {
        perm_max: pmax,
        orth_max_lower_bound: best,
        search_max: search_best,
        maximizer: u.to_rows(),
    })
}

/// The derivation `D^{k,d} X` on the `k`-th exterior power in the
/// lexicographic wedge basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationMatrix<T> {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub basis: Vec<SubsetMask>,
    pub entries: SymMatrix<T>,
}

/// Entry `(T, S)` is the `e_T` coefficient of `Σ_R w_1 ∧ … ∧ w_k` over the
/// `d`-subsets `R` of the wedge slots, where `w_i = X e_{s_i}` for `i ∈ R`
/// and `w_i = e_{s_i}` otherwise; that coefficient is `det(M_R[T, :])`.
pub fn derivation_matrix<T: Scalar>(x: &SymMatrix<T>, k: usize, d: usize) -> Result<DerivationMatrix<T>> {
    let n = x.n();
    if d == 0 || d > k || k > n {
        return Err(Error::Parameter(format!("need 1 ≤ d ≤ k ≤ n, got d={d} k={k} n={n}")));
    }
    let basis = k_subset_indices(n, k);
    let slot_sets = k_subset_indices(k, d);
    let dim = basis.len();
    let mut dense = Dense::<T>::zeros(dim, dim);
    for (b, s) in basis.iter().enumerate() {
        let mats: Vec<Dense<T>> = slot_sets
            .iter()
            .map(|r| {
                Dense::from_fn(n, k, |row, i| {
                    if r.contains(&i) {
                        x.get(row, s[i]).clone()
                    } else if row == s[i] {
                        T::one()
                    } else {
                        T::zero()
                    }
                })
            })
            .collect();
        let cols: Vec<usize> = (0..k).collect();
        for (a, t) in basis.iter().enumerate() {
            let v = mats.iter().fold(T::zero(), |acc, m| acc + m.minor(t, &cols));
            dense.set(a, b, v);
        }
    }
    let two = T::one() + T::one();
    let entries = SymMatrix::from_fn(dim, |i, j| (dense.get(i, j).clone() + dense.get(j, i).clone()) / two.clone());
    let basis = basis
        .iter()
        .map(|s| SubsetMask::new(n, s.iter().fold(0u32, |b, &i| b | (1 << i))))
        .collect::<Result<Vec<_>>>()?;
    Ok(DerivationMatrix { n, k, d, basis, entries })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivationSpectrumReport {
    /// Largest gap between sorted eigenvalues and sorted `e_d(λ_S)`.
    pub eigenvalue_error: f64,
    /// Largest gap between the diagonal at `S` and `E_d(X_S)`.
    pub diagonal_error: f64,
    pub holds: bool,
}

/// Checks the spectrum `{e_d(λ_S)}` and the diagonal `{E_d(X_S)}` of `D^{k,d} X`.
pub fn check_derivation_spectrum(x: &SymMatrix<f64>, k: usize, d: usize, tol: f64) -> Result<DerivationSpectrumReport> {
    let dm = derivation_matrix(x, k, d)?;
    let lambda = x.eigenvalues()?;
    let mut expect: Vec<f64> = k_subset_indices(x.n(), k)
        .iter()
        .map(|s| elementary_value(&s.iter().map(|&i| lambda[i]).collect::<Vec<_>>(), d))
        .collect();
    expect.sort_by(f64::total_cmp);
    let got = dm.entries.eigenvalues()?;
    let eigenvalue_error = got.iter().zip(&expect).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let ed = MultiAffinePoly::elementary(k, d)?;
    let mut diagonal_error = 0.0f64;
    for (i, s) in dm.basis.iter().enumerate() {
        let e = minor_lift_eval(&ed, &x.submatrix(s)?)?;
        diagonal_error = diagonal_error.max((dm.entries.get(i, i) - e).abs());
    }
    Ok(DerivationSpectrumReport {
        eigenvalue_error,
        diagonal_error,
        holds: eigenvalue_error <= tol && diagonal_error <= tol,
    })
}

/// `α` majorizes `β`: equal totals and dominating descending prefix sums, each
/// up to `tol (1 + max|entry|)`.
pub fn majorizes(alpha: &[f64], beta: &[f64], tol: f64) -> Result<bool> {
    if alpha.len() != beta.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len(),
            got: beta.len(),
        });
    }
    let slack = tol * (1.0 + alpha.iter().chain(beta).fold(0.0f64, |m, v| m.max(v.abs())));
    let desc = |v: &[f64]| {
        let mut v = v.to_vec();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    };
    let (a, b) = (desc(alpha), desc(beta));
    let (mut sa, mut sb) = (0.0, 0.0);
    for (x, y) in a.iter().zip(&b) {
        sa += x;
        sb += y;
        if sa < sb - slack {
            return Ok(false);
        }
    }
    Ok((sa - sb).abs() <= slack)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MajorizationReport {
    /// Roots of `t ↦ P(X − tI)`.
    pub roots: Vec<f64>,
    /// Roots of `t ↦ P(diag(X) − tI)`.
    pub diagonal_roots: Vec<f64>,
    pub holds: bool,
}

/// For `P(X) = E_k(D^{-1/2} X D^{-1/2})`, the pencil roots at `X` majorize
/// those at `diag(X)`.
pub fn check_majorization_rescaled_ek(x: &SymMatrix<f64>, d: &[f64], k: usize, tol: f64) -> Result<MajorizationReport> {
    if d.iter().any(|v| !(*v > 0.0)) {
        return Err(Error::Parameter("D must have a positive diagonal".into()));
    }
    let inv: Vec<f64> = d.iter().map(|v| 1.0 / v).collect();
    let p = MultiAffinePoly::elementary(x.n(), k)?.scale_variables(&inv)?;
    let roots = real_roots(&matrix_pencil_poly(&p, x)?, TOL_IMAG)?;
    let diag = SymMatrix::diag(&x.diagonal());
    let diagonal_roots = real_roots(&matrix_pencil_poly(&p, &diag)?, TOL_IMAG)?;
    let holds = majorizes(&roots, &diagonal_roots, tol)?;
    Ok(MajorizationReport {
        roots,
        diagonal_roots,
        holds,
    })
}

/// For homogeneous `p` of degree `n − 1`, returns `(P(X), P*(Adj X))` where
/// `P*(Y) = Σ a_i Y_ii` and `a_i` is the coefficient of `∏_{j≠i} x_j`.
pub fn adjugate_route(p: &MultiAffinePoly<f64>, x: &SymMatrix<f64>) -> Result<(f64, f64)> {
    let n = p.n();
    if !p.is_homogeneous() || p.degree() + 1 != n {
        return Err(Error::DegreeMismatch {
            expected: n - 1,
            got: p.degree(),
        });
    }
    let adj = x.adjugate();
    let full = crate::poly::subset::full_bits(n);
    let dual_linear: f64 = (0..n).map(|i| p.coeff_bits(full & !(1 << i)) * adj.get(i, i)).sum();
    Ok((minor_lift_eval(p, x)?, dual_linear))
}

/// For `p = x_1 · q(x_2, …, x_n)`, returns `(P(X), X_11 · Q(X / X_11))`, where
/// `X / X_11` is the Schur complement of the leading entry.
pub fn schur_reduction(q: &MultiAffinePoly<f64>, x: &SymMatrix<f64>) -> Result<(f64, f64)> {
    let p = q.times_new_variable()?;
    let lhs = minor_lift_eval(&p, x)?;
    let rhs = x.get(0, 0) * minor_lift_eval(q, &x.schur_complement_0()?)?;
    Ok((lhs, rhs))
}

/// Cone report for the arrangement `τ(λ)`.
pub fn arrangement_report(p: &MultiAffinePoly<f64>, lambda: &[f64], tau: &Permutation) -> Result<ConeReport> {
    in_cone_vector(p, &tau.apply(lambda)?, CONE_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::Verdict;

    fn m(rows: &[&[f64]]) -> SymMatrix<f64> {
        SymMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn s(n: usize, i: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(n, i).unwrap()
    }

    #[test]
    fn arrangements_collapse_duplicates() {
        assert_eq!(distinct_arrangements(&[1.0, 2.0, 3.0]).count(), 6);
        assert_eq!(distinct_arrangements(&[1.0, 1.0, 3.0]).count(), 3);
        assert_eq!(distinct_arrangements(&[2.0; 4]).count(), 1);
        let first: Vec<usize> = distinct_arrangements(&[3.0, 1.0, 2.0]).next().unwrap();
        assert_eq!(first, vec![1, 2, 0]);
        let tau = arrangement_permutation(&first);
        assert_eq!(tau.apply(&[3.0, 1.0, 2.0]).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn containment_examples() {
        let x1x2 = MultiAffinePoly::monomial(2, &[1, 2]).unwrap();
        let r = spectral_containment_search(&x1x2, &m(&[&[2.0, 1.0], &[1.0, 2.0]]), CONE_TOL, 0, 0).unwrap();
        assert!(r.found());
        let x1x2 = MultiAffinePoly::monomial(3, &[1, 2]).unwrap();
        let a = SymMatrix::diag(&[1.0, 1.0, -0.2]);
        let r = spectral_containment_search(&x1x2, &a, CONE_TOL, 0, 0).unwrap();
        let tau = r.found_permutation.unwrap();
        let w = tau.apply(&r.eigenvalues).unwrap();
        assert_eq!(w[2], -0.2);
        assert_eq!(arrangement_report(&x1x2, &r.eigenvalues, &tau).unwrap().verdict, Verdict::Inside);
    }

    #[test]
    fn schur_horn_examples() {
        let x1 = MultiAffinePoly::monomial(2, &[1]).unwrap();
        let r = schur_horn_gap(&x1, &SymMatrix::diag(&[1.0, 2.0]), 4, 20, 1).unwrap();
        assert_eq!(r.perm_max, 2.0);
        assert!((r.search_max - 2.0).abs() < 1e-9 && (r.orth_max_lower_bound - 2.0).abs() < 1e-9);
        let e2 = MultiAffinePoly::elementary(3, 2).unwrap();
        let r = schur_horn_gap(&e2, &SymMatrix::identity(3), 2, 5, 1).unwrap();
        assert!((r.perm_max - 3.0).abs() < 1e-12 && (r.orth_max_lower_bound - 3.0).abs() < 1e-9);
    }

    #[test]
    fn derivation_examples() {
        let x = m(&[&[1.0, 2.0], &[2.0, 5.0]]);
        let d = derivation_matrix(&x, 2, 1).unwrap();
        assert_eq!(d.entries.rows(), vec![vec![6.0]]);
        let x = SymMatrix::random_symmetric(3, 4);
        let d = derivation_matrix(&x, 2, 2).unwrap();
        let c = x.compound(2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((d.entries.get(i, j) - c.get(i, j)).abs() < 1e-12);
            }
        }
        let d = derivation_matrix(&SymMatrix::diag(&[1.0, 2.0, 3.0]), 2, 1).unwrap();
        assert_eq!(d.entries, SymMatrix::diag(&[3.0, 4.0, 5.0]));
        assert_eq!(d.basis[0], s(3, &[1, 2]));
        assert!(derivation_matrix(&x, 2, 3).is_err());
    }

    #[test]
    fn derivation_spectrum_of_identity() {
        let r = check_derivation_spectrum(&SymMatrix::identity(4), 3, 2, 1e-10).unwrap();
        assert!(r.holds);
        let r = check_derivation_spectrum(&SymMatrix::random_symmetric(4, 3), 2, 1, 1e-9).unwrap();
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&[2.0, 0.0], &[1.0, 1.0], 1e-8).unwrap());
        assert!(!majorizes(&[1.0, 1.0], &[2.0, 0.0], 1e-8).unwrap());
        assert!(!majorizes(&[1.0, 0.0], &[2.0, 0.0], 1e-8).unwrap());
        assert!(majorizes(&[1.0], &[1.0, 2.0], 1e-8).is_err());
        let x = SymMatrix::diag(&[1.0, 3.0, 2.0]);
        let r = check_majorization_rescaled_ek(&x, &[1.0, 2.0, 0.5], 2, 1e-8).unwrap();
        assert!(r.holds);
        assert!(check_majorization_rescaled_ek(&x, &[1.0, 0.0, 1.0], 2, 1e-8).is_err());
    }

    #[test]
    fn adjugate_and_schur_routes() {
        let x = SymMatrix::random_symmetric(4, 8);
        let p = MultiAffinePoly::elementary(4, 3).unwrap();
        let (a, b) = adjugate_route(&p, &x).unwrap();
        assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()));
        let q = MultiAffinePoly::elementary(3, 2).unwrap();
        let (a, b) = schur_reduction(&q, &x).unwrap();
        assert!((a - b).abs() < 1e-9 * (1.0 + a.abs()));
    }
}
