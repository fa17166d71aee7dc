//! Reference values computed offline (20-digit arithmetic, cross-checked by a
//! constrained optimizer) and small worked examples.

#![allow(clippy::excessive_precision)]

use approx::assert_relative_eq;
use hyperq::hypergraph::build;
use hyperq::split::{bernoulli_parameter, split_ratio_bound};
use hyperq::turan::{check_condition1, check_condition2, fano_extremal_q};
use hyperq::verify::{check_deletion_lemma, verify_extremality, CompetitorKind};
use hyperq::{bn_q_bounds, fano_turan_number, scan_splits, two_block_q, CriterionParams, Operator, SpectralOptions64};

const SPLITS: [(usize, usize, f64); 6] = [
    (5, 4, 46.881_063_880_271_487),
    (1, 3, 4.675_888_669_572_704),
    (3, 2, 10.899_710_195_949_175),
    (5, 6, 73.878_896_895_953_492),
    (6, 3, 43.940_217_559_064_78),
    (4, 1, 8.086_862_308_679_585),
];

#[test]
fn two_block_values_match_reference() {
    for (a, b, want) in SPLITS {
        let p = two_block_q::<f64>(a, b).unwrap();
        assert_relative_eq!(p.q_value, want, max_relative = 1e-12);
        assert!(p.q_value <= p.upper_bound());
    }
}

#[test]
fn power_iteration_matches_reference() {
    for (a, b, want) in SPLITS {
        let (h, _) = build::two_part_complete(a, b).unwrap();
        let res =
            hyperq::spectral::spectral_radius(&h, Operator::SignlessLaplacian, &SpectralOptions64::default()).unwrap();
        assert!(res.converged);
        assert_relative_eq!(res.rho, want, max_relative = 1e-9);
        assert!(res.lower <= want + 1e-9 && want <= res.upper + 1e-9);
    }
}

#[test]
fn single_precision_agrees_loosely() {
    let p = two_block_q::<f32>(5, 4).unwrap();
    assert_relative_eq!(f64::from(p.q_value), 46.881_063_880_271_487, max_relative = 1e-5);
}

#[test]
fn ratio_bound_dominates_split_value() {
    for n in 6..=30usize {
        let t = bernoulli_parameter::<f64>(n);
        for a in 1..n {
            let b = n - a;
            let bound = split_ratio_bound(a, b, t).max(split_ratio_bound(b, a, t));
            let q = two_block_q::<f64>(a, b).unwrap().q_value;
            assert!(q <= bound + 1e-9, "({a},{b}): {q} > {bound}");
        }
    }
}

#[test]
fn bn_bounds_examples() {
    let (lo, hi) = bn_q_bounds::<f64>(8).unwrap();
    assert_eq!((lo, hi), (36.0, 36.0));
    let (lo, hi) = bn_q_bounds::<f64>(9).unwrap();
    assert_relative_eq!(lo, 46.0 + 2.0 / 3.0, max_relative = 1e-14);
    assert_relative_eq!(hi, 47.0, max_relative = 1e-14);
    assert!(bn_q_bounds::<f64>(3).is_err());
}

#[test]
fn scan_prefers_balanced_split() {
    let scan = scan_splits::<f64>(9).unwrap();
    assert_eq!(scan.best_a, 5);
    assert_relative_eq!(scan.best().q_value, 46.881_063_880_271_487, max_relative = 1e-12);
    let unbalanced = scan.profile(6).unwrap().q_value;
    assert!(scan.best().q_value - unbalanced >= 2.25 - 1.0);
}

#[test]
fn condition1_examples() {
    let ex = |n: u64| fano_turan_number(n);
    let params = CriterionParams::fano(0.01, 100..=101).unwrap();
    let rows = check_condition1(&params, ex).unwrap();
    assert_relative_eq!(rows[0].slack, 75.0);
    assert!(rows.iter().all(|r| r.pass));
    let strict = CriterionParams::fano(1e-9, 100..=100).unwrap();
    assert!(!check_condition1(&strict, ex).unwrap()[0].pass);
}

#[test]
fn condition2_examples() {
    let ex = |n: u64| fano_turan_number(n);
    let params = CriterionParams::fano(0.05, 50..=51).unwrap();
    let rows = check_condition2(&params, fano_extremal_q, ex).unwrap();
    assert!(rows[0].slack <= 1e-6);
    assert!(rows[1].slack <= 0.75 + 1e-6);
    assert!(rows.iter().all(|r| r.pass));
    let strict = CriterionParams::fano(1e-9, 51..=51).unwrap();
    assert!(!check_condition2(&strict, fano_extremal_q, ex).unwrap()[0].pass);
    assert!(CriterionParams::new(0.5, 3, 0.05, 50..=60).is_err());
}

#[test]
fn deletion_examples() {
    let k5 = build::complete(5, 3).unwrap();
    let check = check_deletion_lemma::<f64>(&k5, 1e-6).unwrap();
    assert_eq!(check.w, 0);
    assert_relative_eq!(check.lhs, 6.0, max_relative = 1e-9);
    assert_relative_eq!(check.rhs, 4.75, max_relative = 1e-9);
    let (b8, _) = build::balanced_complete_bipartite(8).unwrap();
    assert!(check_deletion_lemma::<f64>(&b8, 1e-6).unwrap().pass);
    let disconnected = hyperq::Hypergraph::new(3, 6, [[0, 1, 2], [3, 4, 5]]).unwrap();
    assert!(matches!(
        check_deletion_lemma::<f64>(&disconnected, 1e-6),
        Err(hyperq::Error::Disconnected)
    ));
}

#[test]
fn extremality_examples() {
    let report = verify_extremality::<f64>(9, 20, 3).unwrap();
    let split = report
        .competitors
        .iter()
        .find(|c| c.kind == CompetitorKind::UnbalancedSplit { a: 6, b: 3 })
        .unwrap();
    assert_relative_eq!(split.q, 43.940_217_559_064_78, max_relative = 1e-9);
    assert!(report.passes(1e-6, 1e-9));
    assert!(verify_extremality::<f64>(6, 5, 0).is_err());
}
