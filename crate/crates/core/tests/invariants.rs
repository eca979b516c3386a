//! Exhaustive invariant sweeps, one test per self-test suite. Each suite
//! clamps the size bound to what it can cover exhaustively.

use rtab::selftest::run_suite;

const MAX_N: usize = 10;

fn run(name: &str) {
    let report = run_suite(name, MAX_N).expect("known suite");
    assert!(report.checks > 0, "{name} ran no checks");
    assert!(report.passed(), "{name}: {} failures, first: {:#?}", report.failures.len(), report.failures);
}

#[test]
fn tableaux() {
    run("tableaux");
}

#[test]
fn evacuation() {
    run("evacuation");
}

#[test]
fn characterizations() {
    run("characterizations");
}

#[test]
fn primes() {
    run("primes");
}

#[test]
fn psi() {
    run("psi");
}

#[test]
fn special_shapes() {
    run("special-shapes");
}

#[test]
fn enumeration() {
    run("enumeration");
}

#[test]
fn symgroup() {
    run("symgroup");
}

#[test]
fn reading_words() {
    run("reading-words");
}

#[test]
fn cells() {
    run("cells");
}

#[test]
fn smoothness() {
    run("smoothness");
}

#[test]
fn k_components() {
    run("k-components");
}

#[test]
fn guemes() {
    run("guemes");
}

#[test]
fn every_suite_is_covered() {
    let names: Vec<&str> = rtab::selftest::SUITES.iter().map(|(n, _)| *n).collect();
    assert_eq!(names.len(), 13);
    assert!(run_suite("no-such-suite", 1).is_none());
}
