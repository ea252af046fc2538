//! Random generators for the polynomial families used by the batteries.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::subset::k_subset_indices;
use crate::poly::{Graph, MultiAffinePoly, SubsetMask};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `e_k(x_1, …, x_n)`.
    Ek,
    /// `e_k(D x)` with log-normal positive diagonal `D`.
    EkRescaled,
    /// Spanning-tree polynomial of a small random connected graph.
    Tree,
    /// `∂^S e_k` for a random proper subset `S`.
    DerivativeEk,
    /// `x_0 · q` with `q` from one of the other families.
    X0Product,
    /// Linear form with nonnegative coefficients.
    Linear,
    /// `e_d(x_1, …, x_n) + ε e_d(x_1, …, x_k)`.
    EkPerturbed,
    /// `Σ a_i ∏_{j≠i} x_j` with `a_i` near one.
    DegreeNMinus1,
    /// `e_2(x_1, …, x_4) − ε (x_1 x_2 + x_1 x_3)`.
    E2Perturbed,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Ek,
        Family::EkRescaled,
        Family::Tree,
        Family::DerivativeEk,
        Family::X0Product,
        Family::Linear,
        Family::EkPerturbed,
        Family::DegreeNMinus1,
        Family::E2Perturbed,
    ];

    /// Families every inequality battery draws from.
    pub const GENERATORS: [Family; 5] = [
        Family::Ek,
        Family::EkRescaled,
        Family::Tree,
        Family::DerivativeEk,
        Family::X0Product,
    ];

    /// Families known to have the spectral containment property.
    pub const SPECTRAL: [Family; 6] = [
        Family::Ek,
        Family::Linear,
        Family::EkPerturbed,
        Family::DegreeNMinus1,
        Family::E2Perturbed,
        Family::X0Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ek => "ek",
            Family::EkRescaled => "ek-rescaled",
            Family::Tree => "tree",
            Family::DerivativeEk => "derivative-ek",
            Family::X0Product => "x0-product",
            Family::Linear => "linear",
            Family::EkPerturbed => "ek-perturbed",
            Family::DegreeNMinus1 => "degree-n-1",
            Family::E2Perturbed => "e2-perturbed",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown family '{s}'")))
    }
}

/// Sampling parameters; unset fields are drawn at random.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub epsilon: Option<f64>,
    /// Largest variable count when `n` is unset.
    pub max_n: usize,
    /// For [`Family::X0Product`]: the families `q` is drawn from.
    pub x0_bases: Vec<Family>,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            n: None,
            k: None,
            d: None,
            epsilon: None,
            max_n: 6,
            x0_bases: vec![Family::Ek, Family::EkRescaled, Family::Tree, Family::DerivativeEk],
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = Some(epsilon);
        self
    }

    pub fn with_x0_bases(mut self, bases: Vec<Family>) -> Self {
        self.x0_bases = bases;
        self
    }

    fn pick_n(&self, rng: &mut impl Rng, min: usize) -> Result<usize> {
        match self.n {
            Some(n) if n < min => Err(Error::Parameter(format!(
                "{} needs n ≥ {min}, got {n}",
                self.family
            ))),
            Some(n) => Ok(n),
            None if self.max_n < min => Err(Error::Parameter(format!(
                "{} needs n ≥ {min}, max is {}",
                self.family, self.max_n
            ))),
            None => Ok(rng.random_range(min.max(3).min(self.max_n)..=self.max_n)),
        }
    }

    fn pick_k(&self, rng: &mut impl Rng, lo: usize, hi: usize) -> Result<usize> {
        match self.k {
            Some(k) if k < lo || k > hi => Err(Error::DegreeTooLarge { k, n: hi }),
            Some(k) => Ok(k),
            None => Ok(rng.random_range(lo..=hi)),
        }
    }

    /// Draws one instance.
    pub fn sample(&self, rng: &mut impl Rng) -> Result<Sample> {
        match self.family {
            Family::Ek => {
                let n = self.pick_n(rng, 1)?;
                let k = self.pick_k(rng, 1, n)?;
                Ok(Sample::new(MultiAffinePoly::elementary(n, k)?, format!("e_{k}(n={n})")))
            }
            Family::EkRescaled => {
                let n = self.pick_n(rng, 1)?;
                let k = self.pick_k(rng, 1, n)?;
                let d = rng::positive_vec(rng, n, 0.5);
                let p = MultiAffinePoly::elementary(n, k)?.scale_variables(&d)?;
                Ok(Sample::new(p, format!("e_{k}(Dx, n={n})")))
            }
            Family::Tree => {
                let g = random_connected_graph(rng, self.n)?;
                let label = format!(
                    "tree(m={}, edges={})",
                    g.vertex_count(),
                    g.edges()
                        .iter()
                        .map(|(u, v)| format!("{}{}", u + 1, v + 1))
                        .collect::<Vec<_>>()
                        .join(",")
                );
                Ok(Sample::new(g.spanning_tree_poly()?, label))
            }
            Family::DerivativeEk => {
                let n = self.pick_n(rng, 2)?;
                let k = self.pick_k(rng, 2, n)?;
                let size = rng.random_range(1..k);
                let mut idx: Vec<usize> = (1..=n).collect();
                idx.shuffle(rng);
                idx.truncate(size);
                let s = SubsetMask::from_indices(n, &idx)?;
                let p = MultiAffinePoly::elementary(n, k)?.partial_subset(&s)?;
                Ok(Sample::new(p, format!("d^{s} e_{k}(n={n})")))
            }
            Family::X0Product => {
                if self.x0_bases.is_empty() || self.x0_bases.contains(&Family::X0Product) {
                    return Err(Error::Parameter("x0-product needs base families other than itself".into()));
                }
                let base = self.x0_bases[rng.random_range(0..self.x0_bases.len())];
                let mut inner = self.clone();
                inner.family = base;
                inner.n = self.n.map(|n| n.saturating_sub(1));
                inner.max_n = self.max_n.saturating_sub(1).max(2);
                let q = inner.sample(rng)?;
                Ok(Sample::new(q.poly.times_new_variable()?, format!("x0*{}", q.label)))
            }
            Family::Linear => {
                let n = self.pick_n(rng, 1)?;
                let coeffs: Vec<f64> = (0..n)
                    .map(|_| if rng.random_bool(0.2) { 0.0 } else { rng.random_range(0.1..2.0) })
                    .collect();
                let coeffs = if coeffs.iter().all(|c| *c == 0.0) { vec![1.0; n] } else { coeffs };
                Ok(Sample::new(MultiAffinePoly::linear(&coeffs)?, format!("linear(n={n})")))
            }
            Family::EkPerturbed => {
                let n = self.pick_n(rng, 2)?;
                let k = self.pick_k(rng, 1, n)?;
                let d = match self.d {
                    Some(d) if d == 0 || d > k => return Err(Error::DegreeTooLarge { k: d, n: k }),
                    Some(d) => d,
                    None => rng.random_range(1..=k),
                };
                let eps = self.epsilon.unwrap_or_else(|| rng.random_range(-0.05..0.05));
                let head = MultiAffinePoly::elementary(k, d)?.embed(n)?;
                let p = MultiAffinePoly::elementary(n, d)?.add(&head.scale(&eps))?;
                Ok(Sample::new(p, format!("e_{d}(n={n}) + {eps:.4} e_{d}(x1..x{k})")))
            }
            Family::DegreeNMinus1 => {
                let n = self.pick_n(rng, 2)?;
                let full = crate::poly::subset::full_bits(n);
                let terms = (0..n).map(|i| (full & !(1u32 << i), rng.random_range(0.95..1.05)));
                let p = MultiAffinePoly::from_bits(n, terms);
                Ok(Sample::new(p, format!("degree-n-1(n={n})")))
            }
            Family::E2Perturbed => {
                if self.n.is_some_and(|n| n != 4) {
                    return Err(Error::Parameter("e2-perturbed is defined for n = 4".into()));
                }
                let eps = self.epsilon.unwrap_or_else(|| rng.random_range(0.02..0.08));
                let s = |i: &[usize]| SubsetMask::from_indices(4, i);
                let perturb = MultiAffinePoly::new(4, [(s(&[1, 2])?, 1.0), (s(&[1, 3])?, 1.0)])?;
                let p = MultiAffinePoly::elementary(4, 2)?.add(&perturb.scale(&-eps))?;
                Ok(Sample::new(p, format!("e_2(n=4) - {eps:.4}(x1x2 + x1x3)")))
            }
        }
    }
}

/// A sampled polynomial and a human-readable description.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub poly: MultiAffinePoly<f64>,
    pub label: String,
}

impl Sample {
    fn new(poly: MultiAffinePoly<f64>, label: String) -> Self {
        Self { poly, label }
    }
}

/// Random connected simple graph on 3 to 5 vertices with at most 7 edges; with
/// `edges = Some(e)` the edge count is exactly `e`.
pub fn random_connected_graph(rng: &mut impl Rng, edges: Option<usize>) -> Result<Graph> {
    let m = match edges {
        Some(e) if e == 0 || e > 15 => return Err(Error::Parameter(format!("no small connected graph has {e} edges"))),
        Some(e) => {
            let lo = (2..).find(|m| m * (m - 1) / 2 >= e).expect("unbounded search");
            rng.random_range(lo..=(e + 1).min(6))
        }
        None => rng.random_range(3..=5),
    };
    let max_edges = m * (m - 1) / 2;
    let target = match edges {
        Some(e) => e,
        None => rng.random_range(m - 1..=max_edges.min(7)),
    };
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    let mut chosen: Vec<(usize, usize)> = (1..m)
        .map(|i| {
            let j = order[rng.random_range(0..i)];
            let u = order[i];
            (u.min(j), u.max(j))
        })
        .collect();
    let mut rest: Vec<(usize, usize)> = k_subset_indices(m, 2)
        .into_iter()
        .map(|e| (e[0], e[1]))
        .filter(|e| !chosen.contains(e))
        .collect();
    rest.shuffle(rng);
    chosen.extend(rest.into_iter().take(target - (m - 1)));
    chosen.sort_unstable();
    Graph::new(m, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::is_stable_probabilistic;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn samples_are_homogeneous_and_stable() {
        let mut r = rng::rng_from_seed(21);
        for f in Family::ALL {
            for _ in 0..8 {
                let s = FamilySpec::new(f).sample(&mut r).unwrap();
                assert!(s.poly.is_homogeneous(), "{}", s.label);
                assert!(s.poly.degree() >= 1, "{}", s.label);
                let verdict = is_stable_probabilistic(&s.poly, 30, 5).unwrap();
                assert!(verdict.is_evidence_stable(), "{}: {verdict:?}", s.label);
            }
        }
    }

    #[test]
    fn fixed_parameters_are_respected() {
        let mut r = rng::rng_from_seed(2);
        let s = FamilySpec::new(Family::Ek).with_n(5).with_k(3).sample(&mut r).unwrap();
        assert_eq!(s.poly, MultiAffinePoly::elementary(5, 3).unwrap());
        let s = FamilySpec::new(Family::X0Product).with_n(5).sample(&mut r).unwrap();
        assert_eq!(s.poly.n(), 5);
        for e in 2..=7 {
            let g = random_connected_graph(&mut r, Some(e)).unwrap();
            assert_eq!(g.edges().len(), e);
            assert!(g.is_connected());
        }
        assert!(FamilySpec::new(Family::Ek).with_n(3).with_k(4).sample(&mut r).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = FamilySpec::new(Family::Tree).sample(&mut rng::rng_from_seed(5)).unwrap();
        let b = FamilySpec::new(Family::Tree).sample(&mut rng::rng_from_seed(5)).unwrap();
        assert_eq!(a, b);
    }
}
