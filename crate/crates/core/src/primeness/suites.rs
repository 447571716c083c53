//! Suites for the ℝ⁵ example and for Koszul exactness of `λ∧·`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{lambda_sampler, SymbolComplex};
use crate::error::Result;
use crate::exterior::{binomial, mult_map, Form};
use crate::linalg::Subspace;
use crate::report::{CheckItem, SuiteReport};

/// `Λ±(W)` for `W = ⟨ω¹..ω⁴⟩ = ⟨e₅⟩^⊥ ⊂ ℝ⁵`; `sign = 1` is self-dual.
pub fn r5_half_space(sign: i64) -> Result<Subspace> {
    let forms = [
        Form::from_words(5, &[(1, "12"), (sign, "34")])?,
        Form::from_words(5, &[(1, "13"), (-sign, "24")])?,
        Form::from_words(5, &[(1, "14"), (sign, "23")])?,
    ];
    Subspace::span(5, 2, &forms)
}

fn r5_items(name: &str, e: &Subspace, samples: usize, seed: u64) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    let product = e.product_space(1)?;
    items.push(CheckItem::new(
        format!("r5.{name}.product_dim"),
        format!("dim {name}·Λ^1 = 7"),
        product.dim() == 7,
        json!({ "dim": product.dim() }),
    ));
    let complex = SymbolComplex::type1(e)?;
    let dual = SymbolComplex::dual(e)?;
    let mut exact = 0;
    let mut dual_agree = 0;
    let mut rank_vectors: Vec<Vec<usize>> = Vec::new();
    for lambda in lambda_sampler(5, samples, seed) {
        let r = complex.at(&lambda)?;
        if r.verdict {
            exact += 1;
        }
        if dual.at(&lambda)?.verdict == r.verdict {
            dual_agree += 1;
        }
        if !rank_vectors.contains(&r.map_ranks) {
            rank_vectors.push(r.map_ranks);
        }
    }
    let at1 = complex.at(&Form::covector(5, 1)?)?;
    items.push(CheckItem::new(
        format!("r5.{name}.type1"),
        format!("the type I complex of {name} is exact at ω^1 and at every sampled λ"),
        at1.verdict && exact == samples && at1.euler_characteristic == 0,
        json!({
            "labels": at1.labels(),
            "dims": at1.dims(),
            "euler_characteristic": at1.euler_characteristic,
            "samples": samples,
            "samples_exact": exact,
        }),
    ));
    items.push(CheckItem::new(
        format!("r5.{name}.dual"),
        format!("the dual complex of {name} agrees with the type I verdict at every sampled λ"),
        dual_agree == samples,
        json!({ "agreeing": dual_agree }),
    ));
    items.push(CheckItem::new(
        format!("r5.{name}.rank_stability"),
        "all sampled λ give the same stage-rank vector",
        rank_vectors.len() == 1,
        json!({ "distinct_rank_vectors": rank_vectors }),
    ));
    Ok(items)
}

/// `E = Λ±(W) ⊂ Λ²(ℝ⁵)` with `W` a hyperplane: both are complete prime.
pub fn r5_suite(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("r5", seed, samples);
    report.extend(r5_items("Λ+(W)", &r5_half_space(1)?, samples, seed)?);
    report.extend(r5_items("Λ-(W)", &r5_half_space(-1)?, samples, seed)?);
    Ok(report)
}

/// One Koszul case: ranks of `λ∧·` into and out of `Λᵏ`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct KoszulCase {
    pub n: usize,
    pub k: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
}

/// Exactness of `Λ^{k−1} → Λᵏ → Λ^{k+1}` under `λ∧·`, by rank count:
/// `rank_in + rank_out = C(n, k)`. The closed form `rank(λ∧·|Λᵏ) = C(n−1, k)`
/// is checked alongside.
pub fn koszul_case(lambda: &Form, k: usize) -> Result<KoszulCase> {
    let n = lambda.ambient();
    let rank_in = if k == 0 { 0 } else { mult_map(lambda, k - 1)?.rank() };
    let rank_out = if k == n { 0 } else { mult_map(lambda, k)?.rank() };
    let closed = |j: usize| if j < n { binomial(n - 1, j) } else { 0 };
    let exact = rank_in + rank_out == binomial(n, k)
        && rank_out == closed(k)
        && (k == 0 || rank_in == closed(k - 1));
    Ok(KoszulCase {
        n,
        k,
        rank_in,
        rank_out,
        exact,
    })
}

/// `samples` seeded triples `(n, k, λ)` with `2 ≤ n ≤ 9`, plus the full
/// type I complex of `E = 0` for each sampled `(n, λ)`.
pub fn koszul_suite(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("koszul", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failing = Vec::new();
    let mut complex_failures = Vec::new();
    for i in 0..samples {
        let n = rng.gen_range(2..=9usize);
        let k = rng.gen_range(0..=n);
        let lambda = lambda_sampler(n, 1, seed.wrapping_add(i as u64)).remove(0);
        let case = koszul_case(&lambda, k)?;
        if !case.exact {
            failing.push(case);
        }
        if i % 10 == 0 {
            let r = SymbolComplex::type1(&Subspace::zero(n, 2.min(n)))?.at(&lambda)?;
            if !r.verdict || r.euler_characteristic != 0 {
                complex_failures.push(json!({ "n": n, "lambda": lambda }));
            }
        }
    }
    report.push(CheckItem::new(
        "koszul.exact",
        "ker(λ∧· on Λ^k) = im(λ∧· on Λ^{k−1}) with rank(λ∧·|Λ^k) = C(n−1, k) for every sampled (n, k, λ)",
        failing.is_empty(),
        json!({ "failing": failing }),
    ));
    report.push(CheckItem::new(
        "koszul.complex",
        "the type I complex of the zero subspace is exact with Euler characteristic 0",
        complex_failures.is_empty(),
        json!({ "failing": complex_failures }),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_spaces_are_three_dimensional() {
        assert_eq!(r5_half_space(1).unwrap().dim(), 3);
        assert_eq!(r5_half_space(-1).unwrap().dim(), 3);
        assert_ne!(r5_half_space(1).unwrap(), r5_half_space(-1).unwrap());
    }

    #[test]
    fn small_suites_pass() {
        let r = r5_suite(5, 1).unwrap();
        assert!(r.passed, "{}", r.to_json());
        let k = koszul_suite(20, 1).unwrap();
        assert!(k.passed, "{}", k.to_json());
    }
}
