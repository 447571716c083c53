use std::path::PathBuf;

use holoprime::holonomy::g2::{g2_phi, g2_suite};
use holoprime::holonomy::spin7::{spin7_omega, spin7_suite};
use holoprime::holonomy::{g2_build_tables, spin7_build_tables};
use holoprime::report::SuiteReport;
use holoprime::{Form, Subspace};

const SAMPLES: usize = 10;
const SEED: u64 = 1;

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect()
}

/// Compares against the stored report; `HOLOPRIME_BLESS=1` rewrites it.
fn golden(name: &str, report: &SuiteReport) {
    let path = fixture(name);
    let text = report.to_json() + "\n";
    if std::env::var_os("HOLOPRIME_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(stored == text, "{name} differs from the stored report");
}

fn assert_passed(report: &SuiteReport) {
    let failures: Vec<_> = report.failures().iter().map(|i| i.id.clone()).collect();
    assert!(report.passed, "failing items: {failures:?}");
}

#[test]
fn g2_suite_passes_and_matches_golden_report() {
    let report = g2_suite(SAMPLES, SEED).unwrap();
    assert_passed(&report);
    for id in ["g2.exhaustive.type1", "g2.exhaustive.type2", "g2.classification", "g2.claim.omega1_meet"] {
        assert!(report.item(id).unwrap().passed, "{id}");
    }
    // the printed list of e⁵ᵢ contains one sign typo
    assert!(!report.item("g2.e5_published_list").unwrap().passed);
    golden("g2_report.json", &report);
}

#[test]
fn spin7_suite_passes_and_matches_golden_report() {
    let (report, p2) = spin7_suite(SAMPLES, SEED).unwrap();
    assert_passed(&report);
    assert_eq!(p2.blade_adapted.rank, 27);
    assert_eq!(p2.projected_blade.rank, 27);
    assert_eq!((p2.blade_adapted.rows, p2.blade_adapted.cols), (27, 48));
    assert!(!report.item("spin7.t_omega.published_labels").unwrap().passed);
    assert!(!report.item("spin7.const.p6_printed_index").unwrap().passed);
    golden("spin7_report.json", &report);
}

#[test]
fn g2_tables() {
    let t = g2_build_tables().unwrap();
    assert_eq!(t.phi, g2_phi());
    assert_eq!(t.psi, g2_phi().hodge_star());
    assert_eq!(t.decomposition.dims(3), vec![1, 7, 27]);
    // Λ²₇ = *(ψ·Λ¹)
    let forms: Vec<Form> = (1..=7)
        .map(|i| t.psi.wedge(&Form::covector(7, i).unwrap()).unwrap().hodge_star())
        .collect();
    assert_eq!(&Subspace::span(7, 2, &forms).unwrap(), t.component(2, 7));
    // Λ⁵₇ = ψ·Λ¹
    assert_eq!(&Subspace::span_one(&t.psi).product_space(1).unwrap(), t.component(5, 7));
    t.decomposition.check_invariants().unwrap();
}

#[test]
fn spin7_tables() {
    let t = spin7_build_tables().unwrap();
    assert_eq!(t.omega, spin7_omega());
    assert_eq!(t.omega.hodge_star(), t.omega);
    assert_eq!(t.decomposition.dims(4), vec![1, 7, 27, 35]);
    assert_eq!(t.lambda_plus().dim(), 35);
    assert_eq!(t.lambda_minus().dim(), 35);
    t.decomposition.check_invariants().unwrap();
}

#[test]
fn saturation_degrees() {
    let spin7 = spin7_build_tables().unwrap();
    assert_eq!(spin7.component(2, 21).saturation_degree().unwrap(), 0);
    assert_eq!(spin7.component(2, 21).product_space(1).unwrap().dim(), 56);
    assert_eq!(spin7.component(2, 7).saturation_degree().unwrap(), 0);
    let g2 = g2_build_tables().unwrap();
    assert_eq!(g2.component(2, 14).saturation_degree().unwrap(), 1);
}

/// A full `E` leaves a truncated Koszul complex, which is not exact at its
/// last stage.
#[test]
fn full_space_gives_inexact_truncation() {
    for (n, k) in [(4, 2), (5, 2), (7, 3)] {
        let e = Subspace::full(n, k);
        let r = holoprime::primeness::SymbolComplex::type1(&e)
            .unwrap()
            .at(&Form::covector(n, 1).unwrap())
            .unwrap();
        assert_eq!(r.dims(), (0..k).map(|i| holoprime::exterior::binomial(n, i)).collect::<Vec<_>>());
        assert!(!r.verdict);
        assert_eq!(r.failing_positions(), vec![k - 1]);
    }
}
