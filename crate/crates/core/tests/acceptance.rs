//! Acceptance criteria. Every criterion prints one PASS/FAIL line with its
//! tolerance; the test fails if any criterion fails.

use holoprime::exterior::{binomial, eigenspace, t_operator};
use holoprime::holonomy::g2::g2_suite;
use holoprime::holonomy::spin7::spin7_suite;
use holoprime::holonomy::{g2_build_tables, spin7_build_tables};
use holoprime::linalg::rational::{int, Rational};
use holoprime::linalg::QMatrix;
use holoprime::mp::{mp_floor, mp_lower_bound_search, replay, sampled_rank_failures, su_embedding_space, Strategy};
use holoprime::primeness::{koszul_suite, r5_suite, SymbolComplex};
use holoprime::report::SuiteReport;
use holoprime::{Form, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 100;
const SEED: u64 = 1;
const EXACT: &str = "exact arithmetic, tolerance 0";

struct Ledger {
    failed: Vec<String>,
}

impl Ledger {
    fn record(&mut self, id: &str, title: &str, tolerance: &str, passed: bool, detail: String) {
        println!(
            "{} criterion {id}: {title} [{tolerance}] {detail}",
            if passed { "PASS" } else { "FAIL" }
        );
        if !passed {
            self.failed.push(id.to_string());
        }
    }
}

/// Every item whose id starts with one of `prefixes` passed; returns the
/// count and the failures.
fn items_pass(report: &SuiteReport, prefixes: &[&str]) -> (usize, Vec<String>) {
    let selected: Vec<_> = report
        .items
        .iter()
        .filter(|i| !i.informational && prefixes.iter().any(|p| i.id.starts_with(p)))
        .collect();
    let failed = selected.iter().filter(|i| !i.passed).map(|i| i.id.clone()).collect();
    (selected.len(), failed)
}

fn ids(report: &SuiteReport, prefix: &str) -> usize {
    report.items.iter().filter(|i| i.id.starts_with(prefix)).count()
}

fn random_form(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Form {
    let coords: Vec<Rational> = (0..binomial(n, k)).map(|_| int(rng.gen_range(-3..=3))).collect();
    Form::from_dense(n, k, &coords)
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    loop {
        let g: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| int(rng.gen_range(-2..=2))).collect())
            .collect();
        if QMatrix::from_rows(g.clone()).unwrap().rank() == n {
            return g;
        }
    }
}

#[test]
fn acceptance() {
    let mut ledger = Ledger { failed: Vec::new() };
    let g2_tables = g2_build_tables().unwrap();
    let spin7_tables = spin7_build_tables().unwrap();
    let g2 = g2_suite(SAMPLES, SEED).unwrap();
    let (spin7, p2) = spin7_suite(SAMPLES, SEED).unwrap();

    // 1
    let expected: [&[usize]; 8] = [&[1], &[7], &[7, 14], &[1, 7, 27], &[1, 7, 27], &[7, 14], &[7], &[1]];
    let got: Vec<Vec<usize>> = (0..=7).map(|k| g2_tables.decomposition.dims(k)).collect();
    ledger.record(
        "1",
        "G₂ decomposition dimensions",
        EXACT,
        got.iter().zip(expected).all(|(g, e)| g.as_slice() == e),
        format!("measured {got:?}"),
    );

    // 2
    let t = t_operator(&spin7_tables.omega, 2).unwrap();
    let minus_one = eigenspace(&t, &int(-1)).unwrap().dim();
    let three = eigenspace(&t, &int(3)).unwrap().dim();
    let dims_expected: [&[usize]; 5] = [&[7, 21], &[8, 48], &[1, 7, 27, 35], &[8, 48], &[7, 21]];
    let dims: Vec<Vec<usize>> = (2..=6).map(|k| spin7_tables.decomposition.dims(k)).collect();
    let dims_ok = dims.iter().zip(dims_expected).all(|(g, e)| g.as_slice() == e);
    ledger.record(
        "2",
        "Spin(7): T_Ω has eigenvalue −1 with multiplicity 7 and 3 with multiplicity 21; degree dimensions",
        EXACT,
        minus_one == 7 && three == 21 && dims_ok,
        format!(
            "measured multiplicity of −1 = {minus_one}, of 3 = {three}; dimensions {dims:?} ({})",
            if dims_ok { "match" } else { "differ" }
        ),
    );

    // 3
    let (n_g2, f_g2) = items_pass(&g2, &["g2.rel."]);
    let (n_s7, f_s7) = items_pass(&spin7, &["spin7.rel."]);
    ledger.record(
        "3",
        "G₂ and Spin(7) relation tables as subspace equalities",
        EXACT,
        n_g2 >= 8 && n_s7 >= 10 && f_g2.is_empty() && f_s7.is_empty(),
        format!("{n_g2} G₂ and {n_s7} Spin(7) relations checked, failing {:?}", [f_g2, f_s7].concat()),
    );

    // 4
    let (count, failed) = items_pass(
        &g2,
        &[
            "g2.complex.",
            "g2.const.",
            "g2.claim.",
            "g2.obstruction.",
            "g2.exhaustive.",
        ],
    );
    let complexes = ["g2.complex.type1_psi", "g2.complex.type2_a", "g2.complex.type2_b"]
        .iter()
        .all(|id| g2.item(id).map(|i| i.passed).unwrap_or(false));
    ledger.record(
        "4",
        "G₂ complexes exact at ω¹ and 100 sampled λ; constants 3/7, −4/7, ±1/2; ω¹Λ⁴ ∩ Λ⁵₇ one-dimensional; exhaustive scan",
        EXACT,
        complexes && failed.is_empty() && ids(&g2, "g2.const.") >= 16,
        format!("{count} items, failing {failed:?}"),
    );

    // 5
    let displayed = [
        "type1_minus",
        "type1_plus",
        "type1_3_8",
        "type1_4_27",
        "type1_6_7",
        "type2_2_7",
        "type2_3_8",
        "type2_4_8",
        "type2_2_21",
    ];
    let complex_count = displayed
        .iter()
        .filter(|id| spin7.item(&format!("spin7.complex.{id}")).map(|i| i.passed).unwrap_or(false))
        .count();
    let (count, failed) = items_pass(
        &spin7,
        &["spin7.complex.", "spin7.const.", "spin7.p1.", "spin7.p2.", "spin7.p7.", "spin7.exhaustive."],
    );
    let rank_ok = p2.blade_adapted.rank == 27 && p2.projected_blade.rank == 27;
    ledger.record(
        "5",
        "Spin(7) complexes exact under the same protocol; constants 1/7, −3/7, 1/2, 4/7; p₂ matrix of rank 27",
        EXACT,
        complex_count == 9 && failed.is_empty() && rank_ok,
        format!(
            "{complex_count}/9 displayed complexes exact, {count} items, p₂ rank {}/{} ({}×{}), failing {failed:?}",
            p2.blade_adapted.rank, p2.projected_blade.rank, p2.blade_adapted.rows, p2.blade_adapted.cols
        ),
    );

    // 6
    let (count, failed) = items_pass(&g2, &["g2.classification"]);
    let (count2, failed2) = items_pass(&spin7, &["spin7.classification"]);
    ledger.record(
        "6",
        "certified-prime component sums equal the published lists; every excluded sum has a verified witness",
        EXACT,
        count + count2 == 4 && failed.is_empty() && failed2.is_empty(),
        format!("failing {:?}", [failed, failed2].concat()),
    );

    // 7
    let r5 = r5_suite(SAMPLES, SEED).unwrap();
    let (count, failed) = items_pass(&r5, &["r5."]);
    ledger.record(
        "7",
        "ℝ⁵ example: dim E·Λ¹ = 7 and the complex exact for 100 sampled λ, both E = Λ±(W)",
        EXACT,
        count == 8 && failed.is_empty(),
        format!("{count} items, failing {failed:?}"),
    );

    // 8
    let mut mp_detail = Vec::new();
    let mut mp_ok = true;
    for n in 4..=10 {
        let c = mp_lower_bound_search(n, Strategy::Greedy, 10_000, SEED).unwrap();
        let replayed = replay(&c).is_ok();
        mp_ok &= c.dimension >= mp_floor(n) && replayed;
        mp_detail.push(format!("n={n}: {} ≥ {}", c.dimension, mp_floor(n)));
    }
    let mut rank_failures = 0;
    for m in 2..=5 {
        rank_failures += sampled_rank_failures(&su_embedding_space(m).unwrap(), 1000, SEED + m as u64).unwrap();
    }
    ledger.record(
        "8",
        "MP lower bounds ⌊n/2⌋²−1 for n = 4..10 with replayed certificates; su(m) sampling",
        "exact arithmetic; 1000 draws per m = 2..5, zero rank-<4 elements allowed",
        mp_ok && rank_failures == 0,
        format!("{}; rank-<4 draws {rank_failures}", mp_detail.join(", ")),
    );

    // 9
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut star_ok = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=9);
        let k = rng.gen_range(0..=n);
        let f = random_form(&mut rng, n, k);
        let sign = if (k * (n - k)) % 2 == 0 { 1 } else { -1 };
        if f.hodge_star().hodge_star() == f.scale(&int(sign)) {
            star_ok += 1;
        }
    }
    let koszul = koszul_suite(200, SEED).unwrap();
    let mut adjoint_ok = 0;
    for _ in 0..100 {
        let n = rng.gen_range(2..=8);
        let k = rng.gen_range(1..=n / 2);
        let alpha = random_form(&mut rng, n, n - 2 * k);
        let (b, c) = (random_form(&mut rng, n, k), random_form(&mut rng, n, k));
        let t = t_operator(&alpha, k).unwrap();
        let apply = |f: &Form| Form::from_dense(n, k, &t.matrix().apply(&f.to_dense()).unwrap());
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        if apply(&b).inner(&c).unwrap() == b.inner(&apply(&c)).unwrap() * sign {
            adjoint_ok += 1;
        }
    }
    // every exact protocol outcome in the suites carries Euler characteristic 0
    let mut exact_complexes = 0;
    let mut euler_ok = true;
    for s in [&g2, &spin7] {
        for i in &s.items {
            let outcome = &i.details["outcome"];
            if outcome.is_object() && outcome["exact_at_omega1"] == true {
                exact_complexes += 1;
                euler_ok &= outcome["euler_characteristic"] == 0;
            }
        }
    }
    for i in r5.items.iter().filter(|i| i.id.ends_with(".type1") && i.passed) {
        exact_complexes += 1;
        euler_ok &= i.details["euler_characteristic"] == 0;
    }
    let dual_ok = g2.item("g2.exhaustive.dual").unwrap().passed && spin7.item("spin7.exhaustive.dual").unwrap().passed;
    let om1 = Form::covector(7, 1).unwrap();
    let cases: Vec<Subspace> = vec![
        g2_tables.component(4, 1).clone(),
        g2_tables.component(2, 7).clone(),
        g2_tables.component(2, 14).clone(),
    ];
    let base: Vec<bool> = cases
        .iter()
        .map(|e| SymbolComplex::type1(e).unwrap().at(&om1).unwrap().verdict)
        .collect();
    let mut iso_ok = 0;
    for _ in 0..50 {
        let g = random_invertible(&mut rng, 7);
        let lambda = om1.substitute(&g).unwrap();
        let same = cases.iter().zip(&base).all(|(e, b)| {
            SymbolComplex::type1(&e.substitute(&g).unwrap()).unwrap().at(&lambda).unwrap().verdict == *b
        });
        if same {
            iso_ok += 1;
        }
    }
    ledger.record(
        "9",
        "property suites: star sign, Koszul, T_α adjointness, Euler characteristic, type I ⇔ dual, substitution invariance",
        EXACT,
        star_ok == 500 && koszul.passed && adjoint_ok == 100 && euler_ok && dual_ok && iso_ok == 50,
        format!(
            "star {star_ok}/500, Koszul {} (200 cases), adjointness {adjoint_ok}/100 with sign (−1)^k, Euler 0 on {exact_complexes} exact complexes: {euler_ok}, dual {dual_ok}, substitutions {iso_ok}/50",
            if koszul.passed { "exact" } else { "FAILED" }
        ),
    );

    assert!(ledger.failed.is_empty(), "failing criteria: {:?}", ledger.failed);
}
