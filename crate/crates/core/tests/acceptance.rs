//! Acceptance battery: one test per verification suite, each printing a
//! pass/fail line with the instance count. All checks are exact; there are
//! no tolerances anywhere.

use quivergr::verify::{run_suite, SuiteReport, VerifyConfig};

fn run(criterion: usize, name: &str) -> SuiteReport {
    let config = VerifyConfig::default();
    let report = run_suite(name, &config).unwrap_or_else(|e| panic!("{name} errored: {e}"));
    println!(
        "criterion {criterion:2} [{name}]: {} ({} instances) - {}",
        if report.passed { "PASS" } else { "FAIL" },
        report.instances,
        report.detail
    );
    assert!(
        report.passed,
        "criterion {criterion} [{name}]: {}",
        report.detail
    );
    report
}

#[test]
fn acceptance_01_measure_order_oracle() {
    let r = run(1, "measure-order");
    assert_eq!(r.instances, 4096 * 4096);
}

#[test]
fn acceptance_02_piling_prefix_equivalence() {
    run(2, "piling");
}

#[test]
fn acceptance_03_gr_inclusion_length_bound() {
    run(3, "gr-bound");
}

#[test]
fn acceptance_04_takeoff_prefix() {
    run(4, "takeoff");
}

#[test]
fn acceptance_05_bimodule_dimension_tables() {
    run(5, "dim-tables");
}

#[test]
fn acceptance_06_unique_tube_gr_submodule() {
    run(6, "tube-gr");
}

#[test]
fn acceptance_07_filtrations_contain_the_boundary() {
    run(7, "tube-filtration");
}

#[test]
fn acceptance_08_four_subspace_tube() {
    run(8, "four-subspace");
}

#[test]
fn acceptance_09_pruefer_limit_measure() {
    run(9, "pruefer");
}

#[test]
fn acceptance_10_coxeter_lengths() {
    run(10, "coxeter");
}

#[test]
fn acceptance_11_preinjective_exclusion() {
    run(11, "preinjective-exclusion");
}

#[test]
fn acceptance_12_complement_length_bound() {
    run(12, "complement-bound");
}

#[test]
fn acceptance_13_classification_cross_check() {
    run(13, "classification");
}

#[test]
fn acceptance_14_sing_closed_under_addition() {
    run(14, "sing-additivity");
}
