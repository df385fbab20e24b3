//! The acceptance checks, one test per criterion. Each prints its single
//! summary line (visible with `--nocapture`) and fails if the criterion
//! fails or overruns its wall-clock allowance. Set PERISPLIT_ACCEPTANCE=quick
//! to run the reduced workload used for fast iteration; the default is the
//! full documented profile.

use perisplit_core::acceptance::{run_criterion, Profile};

fn profile() -> Profile {
    match std::env::var("PERISPLIT_ACCEPTANCE").as_deref() {
        Ok("quick") => Profile::Quick,
        _ => Profile::Full,
    }
}

fn check(index: usize) {
    let outcome = run_criterion(index, profile());
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn a01_splitting_ring_ranks() {
    check(1);
}

#[test]
fn a02_discriminant_identities() {
    check(2);
}

#[test]
fn a03_epsilon_probes() {
    check(3);
}

#[test]
fn a04_point_samples() {
    check(4);
}

#[test]
fn a05_betti_oracle_agreement() {
    check(5);
}

#[test]
fn a06_euler_consistency() {
    check(6);
}

#[test]
fn a07_factorization_compatibility() {
    check(7);
}

#[test]
fn a08_cohomology_specialization() {
    check(8);
}

#[test]
fn a09_multiplicity_freeness() {
    check(9);
}

#[test]
fn a10_boundary_binomial_tables() {
    check(10);
}
