mod common;

use common::close;
use lpm_core::cones::sample_in_cone_matrix;
use lpm_core::families::{Family, FamilySpec};
use lpm_core::inequalities::{
    check_diag_corollary, check_fischer_hadamard, check_monotone_segment, check_nlc_battery, Tolerance,
};
use lpm_core::rng::sample_rng;
use lpm_core::{MultiAffinePoly, Partition, SymMatrix};
use proptest::prelude::*;

fn instance(seed: u64) -> (MultiAffinePoly<f64>, SymMatrix<f64>, Partition) {
    let f = Family::GENERATORS[(seed % 5) as usize];
    let mut r = sample_rng(seed, 0);
    let p = FamilySpec::new(f).with_max_n(6).sample(&mut r).unwrap().poly;
    let a = sample_in_cone_matrix(&p, 0.1, &mut r).unwrap();
    let part = Partition::random(p.n(), &mut r);
    (p, a, part)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn segment_endpoints_match_fischer_record(seed in any::<u64>()) {
        let (p, a, part) = instance(seed);
        let tol = Tolerance::default();
        let rec = check_fischer_hadamard(&p, &a, &part, tol).unwrap();
        let seg = check_monotone_segment(&p, &a, &part, 11, tol).unwrap();
        prop_assert!(close(seg.start(), rec.rhs, 1e-12));
        prop_assert!(close(seg.end(), rec.lhs, 1e-12));
        prop_assert!(rec.verdict && seg.holds);
    }

    #[test]
    fn singleton_partition_is_the_diagonal_corollary(seed in any::<u64>()) {
        let (p, a, _) = instance(seed);
        let tol = Tolerance::default();
        let rec = check_fischer_hadamard(&p, &a, &Partition::singletons(p.n()), tol).unwrap();
        let diag = check_diag_corollary(&p, &a, tol).unwrap();
        prop_assert!(close(rec.lhs, diag.record.lhs, 1e-12));
        prop_assert!(close(rec.rhs, diag.record.rhs, 1e-12));
        prop_assert!(diag.holds());
    }

    #[test]
    fn shifted_polynomial_has_nonnegative_coefficients(seed in any::<u64>()) {
        let (p, a, _) = instance(seed);
        let rep = check_nlc_battery(&p, &a, Tolerance::default()).unwrap();
        prop_assert!(rep.coefficients_nonnegative, "min coefficient {}", rep.min_coefficient);
        prop_assert!(rep.holds());
    }
}
