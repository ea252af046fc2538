use lpm_core::cones::{sample_in_cone_vector, in_cone_vector, BOUNDARY_TOL};
use lpm_core::families::{Family, FamilySpec};
use lpm_core::permwalk::{build_h_chain, chain_spread, permutation_walk, transcone_probe};
use lpm_core::rng::sample_rng;
use lpm_core::MultiAffinePoly;
use proptest::prelude::*;

fn stable_poly(seed: u64) -> MultiAffinePoly<f64> {
    let f = Family::GENERATORS[(seed % 5) as usize];
    FamilySpec::new(f).with_max_n(5).sample(&mut sample_rng(seed, 0)).unwrap().poly
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn walks_end_inside_and_are_deterministic(seed in any::<u64>(), margin in 0.0f64..0.5) {
        let h = stable_poly(seed);
        prop_assume!(h.n() >= 2);
        let ed = MultiAffinePoly::elementary(h.n(), h.degree()).unwrap();
        let v = sample_in_cone_vector(&ed, margin, &mut sample_rng(seed, 1)).unwrap();
        let first = permutation_walk(&h, &v, BOUNDARY_TOL).unwrap();
        let again = permutation_walk(&h, &v, BOUNDARY_TOL).unwrap();
        prop_assert_eq!(&first, &again);
        prop_assert!(first.success);
        let fin = first.final_report.as_ref().expect("a successful walk records the final check");
        prop_assert!(fin.verdict.in_closed_cone());
        let direct = in_cone_vector(&h, &first.tau.apply(&v).unwrap(), BOUNDARY_TOL).unwrap();
        prop_assert!(direct.verdict.in_closed_cone());
    }

    #[test]
    fn chain_ends_at_the_symmetrization(seed in any::<u64>()) {
        let h = stable_poly(seed);
        prop_assume!(h.n() >= 2);
        let chain = build_h_chain(&h).unwrap();
        prop_assert_eq!(chain.len(), h.n() * (h.n() - 1) / 2 + 1);
        prop_assert!(chain_spread(chain.last().unwrap()) <= 1e-10);
    }

    #[test]
    fn chain_cones_are_covered_by_neighbours(seed in any::<u64>()) {
        let h = stable_poly(seed);
        prop_assume!(h.n() >= 2 && h.n() <= 4);
        let rep = transcone_probe(&h, 3, seed).unwrap();
        prop_assert_eq!(rep.violations, 0);
    }
}
