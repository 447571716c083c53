//! Shared machinery for the suites: relation checks, prime classification
//! over component sums, the exactness protocol and exhaustiveness scans.

use serde::Serialize;
use serde_json::{json, Value};

use super::{ComponentSum, Decomposition};
use crate::error::Result;
use crate::exterior::Form;
use crate::linalg::Subspace;
use crate::primeness::{lambda_sampler, prime_check_invariant, PrimeVerdict, SymbolComplex};
use crate::report::CheckItem;

/// `lhs·Λ¹ = rhs` as subspaces.
pub fn relation_item(id: &str, lhs_name: &str, lhs: &Subspace, rhs_name: &str, rhs: &Subspace) -> Result<CheckItem> {
    let product = lhs.product_space(1)?;
    Ok(CheckItem::new(
        id,
        format!("{lhs_name}·Λ^1 = {rhs_name}"),
        product == *rhs,
        json!({ "product_dim": product.dim(), "expected_dim": rhs.dim() }),
    ))
}

#[derive(Clone, Debug)]
pub struct Classified {
    pub sum: ComponentSum,
    pub verdict: PrimeVerdict,
}

/// Runs the invariant-λ prime check at `ω¹` with transitivity asserted on
/// every component sum of the given degrees.
pub fn classify(dec: &Decomposition, degrees: std::ops::RangeInclusive<usize>) -> Result<Vec<Classified>> {
    let omega1 = Form::covector(dec.ambient(), 1)?;
    let mut out = Vec::new();
    for k in degrees {
        for sum in dec.sums(k) {
            let verdict = prime_check_invariant(&sum.space, &omega1, true)?;
            out.push(Classified { sum, verdict });
        }
    }
    Ok(out)
}

/// Compares the certified-prime sums with `expected` (names as produced by
/// [`ComponentSum::name`]) and checks every excluded sum's witness.
pub fn classification_items(prefix: &str, classified: &[Classified], expected: &[String]) -> Vec<CheckItem> {
    let mut items = Vec::new();
    let mut certified: Vec<String> = Vec::new();
    let mut verdicts = Vec::new();
    let mut witnesses_ok = true;
    for c in classified {
        let name = c.sum.name();
        if c.verdict.is_certified_prime() {
            certified.push(name.clone());
        } else {
            let ok = c
                .verdict
                .witness
                .as_ref()
                .map(|w| w.verify_in(&c.sum.space))
                .unwrap_or(false);
            witnesses_ok &= ok;
        }
        verdicts.push(json!({
            "space": name,
            "dim": c.sum.space.dim(),
            "verdict": c.verdict,
        }));
    }
    let mut want = expected.to_vec();
    want.sort();
    let mut got = certified.clone();
    got.sort();
    items.push(CheckItem::new(
        format!("{prefix}.classification"),
        "the certified-prime component sums are exactly the published list",
        got == want,
        json!({ "certified": certified, "expected": expected, "verdicts": verdicts }),
    ));
    items.push(CheckItem::new(
        format!("{prefix}.classification.witnesses"),
        "every excluded sum carries a re-verified witness α∧λ = 0",
        witnesses_ok,
        Value::Null,
    ));
    items
}

#[derive(Clone, Debug, Serialize)]
pub struct ProtocolOutcome {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub euler_characteristic: i64,
    pub exact_at_omega1: bool,
    pub failing_stages_at_omega1: Vec<usize>,
    pub map_ranks_at_omega1: Vec<usize>,
    pub samples: usize,
    pub samples_exact: usize,
    pub first_inexact_lambda: Option<Form>,
}

impl ProtocolOutcome {
    pub fn all_exact(&self) -> bool {
        self.exact_at_omega1 && self.samples_exact == self.samples
    }
}

/// Evaluates a complex at `ω¹` and at `samples` seeded random covectors.
pub fn exactness_protocol(complex: &SymbolComplex, n: usize, samples: usize, seed: u64) -> Result<ProtocolOutcome> {
    let at1 = complex.at(&Form::covector(n, 1)?)?;
    let mut exact = 0;
    let mut first = None;
    for lambda in lambda_sampler(n, samples, seed) {
        if complex.at(&lambda)?.verdict {
            exact += 1;
        } else if first.is_none() {
            first = Some(lambda);
        }
    }
    Ok(ProtocolOutcome {
        labels: at1.labels(),
        dims: at1.dims(),
        euler_characteristic: at1.euler_characteristic,
        exact_at_omega1: at1.verdict,
        failing_stages_at_omega1: at1.failing_positions(),
        map_ranks_at_omega1: at1.map_ranks.clone(),
        samples,
        samples_exact: exact,
        first_inexact_lambda: first,
    })
}

/// Check item for the protocol, optionally also pinning the stage dimensions.
pub fn protocol_item(
    id: &str,
    claim: &str,
    complex: &SymbolComplex,
    n: usize,
    expected_dims: Option<&[usize]>,
    samples: usize,
    seed: u64,
) -> Result<CheckItem> {
    let out = exactness_protocol(complex, n, samples, seed)?;
    let dims_ok = expected_dims.map(|d| d == out.dims.as_slice()).unwrap_or(true);
    Ok(CheckItem::new(
        id,
        claim,
        out.all_exact() && dims_ok && out.euler_characteristic == 0,
        json!({ "expected_dims": expected_dims, "outcome": out }),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub generator: String,
    pub dims: Vec<usize>,
    pub type1_exact: bool,
    pub dual_exact: bool,
}

/// Type I and dual complexes at `ω¹` for every component sum of degrees
/// `degrees`.
pub fn type1_scan(dec: &Decomposition, degrees: std::ops::RangeInclusive<usize>) -> Result<Vec<ScanEntry>> {
    let omega1 = Form::covector(dec.ambient(), 1)?;
    let mut out = Vec::new();
    for k in degrees {
        for sum in dec.sums(k) {
            let t1 = SymbolComplex::type1(&sum.space)?;
            let dual = SymbolComplex::dual(&sum.space)?;
            out.push(ScanEntry {
                generator: sum.name(),
                dims: t1.dims(),
                type1_exact: t1.at(&omega1)?.verdict,
                dual_exact: dual.at(&omega1)?.verdict,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PairEntry {
    pub f: String,
    pub e: String,
    pub dims: Vec<usize>,
    pub exact: bool,
}

/// Type II complexes at `ω¹` for every prime sum `F` of degree `2..=n−2`
/// against every nonzero proper sum `E` of degree `deg F + 1`.
pub fn type2_scan(dec: &Decomposition, classified: &[Classified]) -> Result<Vec<PairEntry>> {
    let n = dec.ambient();
    let omega1 = Form::covector(n, 1)?;
    let mut out = Vec::new();
    for k in 2..=n - 2 {
        let targets: Vec<ComponentSum> = dec.sums(k + 1).into_iter().filter(|s| !s.is_full()).collect();
        for f in classified
            .iter()
            .filter(|c| c.sum.degree == k && c.verdict.is_certified_prime())
        {
            for e in &targets {
                let complex = SymbolComplex::type2(&f.sum.space, &e.space)?;
                out.push(PairEntry {
                    f: f.sum.name(),
                    e: e.name(),
                    dims: complex.dims(),
                    exact: complex.at(&omega1)?.verdict,
                });
            }
        }
    }
    Ok(out)
}

/// Exhaustiveness items from the two scans.
pub fn exhaustiveness_items(
    prefix: &str,
    type1: &[ScanEntry],
    type2: &[PairEntry],
    expected_type1: &[String],
    expected_type2: &[(String, String)],
) -> Vec<CheckItem> {
    let mut got1: Vec<String> = type1
        .iter()
        .filter(|e| e.type1_exact)
        .map(|e| e.generator.clone())
        .collect();
    got1.sort();
    let mut want1 = expected_type1.to_vec();
    want1.sort();
    let mut got2: Vec<(String, String)> = type2
        .iter()
        .filter(|e| e.exact)
        .map(|e| (e.f.clone(), e.e.clone()))
        .collect();
    got2.sort();
    let mut want2 = expected_type2.to_vec();
    want2.sort();
    let dual_agrees = type1.iter().all(|e| e.type1_exact == e.dual_exact);
    vec![
        CheckItem::new(
            format!("{prefix}.exhaustive.type1"),
            "the type I generators exact at ω¹ among all component sums are exactly the expected set",
            got1 == want1,
            json!({ "exact": got1, "expected": want1, "scan": type1 }),
        ),
        CheckItem::new(
            format!("{prefix}.exhaustive.type2"),
            "the type II pairs (F prime, E proper) exact at ω¹ are exactly the listed pairs",
            got2 == want2,
            json!({ "exact": got2, "expected": want2, "scanned": type2.len() }),
        ),
        CheckItem::new(
            format!("{prefix}.exhaustive.dual"),
            "type I exactness agrees with exactness of the dual complex for every component sum",
            dual_agrees,
            Value::Null,
        ),
    ]
}

/// `a == b` as forms, with both recorded for the report.
pub fn form_item(id: &str, claim: &str, got: &Form, expected: &Form) -> CheckItem {
    CheckItem::new(
        id,
        claim,
        got == expected,
        json!({ "computed": got, "expected": expected }),
    )
}
