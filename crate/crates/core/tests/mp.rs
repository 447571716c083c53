use holoprime::exterior::rank_two_form;
use holoprime::mp::*;
use holoprime::primeness::{numeric_prime_certificate, prime_check_invariant};
use holoprime::{Form, Subspace};

fn w(n: usize, word: &str) -> Form {
    Form::from_words(n, &[(1, word)]).unwrap()
}

#[test]
fn l_lambda_of_zero_and_anti_self_dual() {
    let om1 = Form::covector(4, 1).unwrap();
    let l = l_lambda(&Subspace::zero(4, 2), &om1).unwrap();
    assert_eq!(l, Subspace::span(4, 2, &[w(4, "12"), w(4, "13"), w(4, "14")]).unwrap());
    let minus = Baseline::AntiSelfDualR4.space().unwrap();
    assert!(l_lambda(&minus, &om1).unwrap().is_full());
}

#[test]
fn saturated_space_cannot_be_extended() {
    // dim Λ⁻(ℝ⁴) = 3 = ½(n−1)(n−2), so L(λ) is everything for every λ
    let minus = Baseline::AntiSelfDualR4.space().unwrap();
    for coords in [[1, 0, 0, 0], [1, 2, -1, 3], [0, 0, 0, 1]] {
        let lambda = holoprime::primeness::verdict::covector_from_ints(&coords).unwrap();
        assert!(l_lambda(&minus, &lambda).unwrap().is_full());
        for alpha in Subspace::full(4, 2).basis_forms() {
            assert!(extend_one(&minus, &lambda, &alpha).unwrap().is_none());
            let cert = membership_certificate(&minus, &lambda, &alpha).unwrap().unwrap();
            assert!(cert.verify(&minus, &lambda, &alpha));
        }
    }
}

#[test]
fn extend_one_trivial_rejections() {
    let e = attach(&Baseline::AntiSelfDualR4.space().unwrap(), &[], &[]).unwrap();
    let om1 = Form::covector(5, 1).unwrap();
    for alpha in e.basis_forms() {
        assert!(extend_one(&e, &om1, &alpha).unwrap().is_none());
    }
    let in_lambda = om1.wedge(&Form::covector(5, 2).unwrap()).unwrap();
    assert!(extend_one(&e, &om1, &in_lambda).unwrap().is_none());
    assert!(extend_one(&e, &Form::zero(5, 1), &w(5, "25")).is_err());
}

#[test]
fn single_covector_multi_matches_extend_one() {
    let e = attach(&Baseline::AntiSelfDualR4.space().unwrap(), &[], &[]).unwrap();
    let om1 = Form::covector(5, 1).unwrap();
    for alpha in Subspace::full(5, 2).basis_forms() {
        let one = extend_one(&e, &om1, &alpha).unwrap();
        let multi = extend_multi(&e, std::slice::from_ref(&om1), std::slice::from_ref(&alpha)).unwrap();
        assert_eq!(one, multi);
    }
}

#[test]
fn su_rank_sampling() {
    for m in 2..=5 {
        let space = su_embedding_space(m).unwrap();
        assert_eq!(space.dim(), m * m - 1);
        assert_eq!(sampled_rank_failures(&space, 1000, m as u64).unwrap(), 0, "m = {m}");
    }
}

#[test]
fn su_is_prime_exactly_and_numerically() {
    for m in 2..=4 {
        let space = su_embedding_space(m).unwrap();
        let v = prime_check_invariant(&space, &Form::covector(2 * m, 1).unwrap(), true).unwrap();
        assert!(v.is_certified_prime());
        let c = numeric_prime_certificate(&space, 3, 1e-6, 9).unwrap();
        assert!(c.minimum > 0.1, "m = {m}: {}", c.minimum);
        for f in space.basis_forms() {
            assert!(rank_two_form(&f).unwrap() >= 2);
        }
    }
}

#[test]
fn search_meets_floor_and_replays() {
    let expected = [(4, 3), (5, 3), (6, 8), (7, 9), (8, 15), (9, 17), (10, 24)];
    for (n, dim) in expected {
        let c = mp_lower_bound_search(n, Strategy::Greedy, 10_000, 1).unwrap();
        assert_eq!(c.dimension, dim, "n = {n}");
        assert!(c.dimension >= mp_floor(n));
        assert!(!c.budget_exhausted);
        assert!(!c.numeric.below_tolerance);
        let replayed = replay(&c).unwrap();
        assert_eq!(replayed.dim(), c.dimension);
        // JSON round trip keeps the certificate replayable
        let back: MpCertificate = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(replay(&back).unwrap(), replayed);
    }
}

#[test]
fn n5_reports_missing_room() {
    let c = mp_lower_bound_search(5, Strategy::Greedy, 100, 1).unwrap();
    assert_eq!(c.dimension, 3);
    assert_eq!(c.count_condition_from_previous, Some(false));
}

#[test]
fn randomized_search_is_seeded() {
    let a = mp_lower_bound_search(7, Strategy::Randomized, 500, 3).unwrap();
    let b = mp_lower_bound_search(7, Strategy::Randomized, 500, 3).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(a.dimension >= mp_floor(7));
    replay(&a).unwrap();
}

#[test]
fn monotone_in_n() {
    let mut prev = 0;
    for n in 4..=9 {
        let c = mp_lower_bound_search(n, Strategy::Greedy, 10_000, 2).unwrap();
        assert!(c.dimension >= prev);
        prev = c.dimension;
    }
}

#[test]
fn exhausted_budget_keeps_best_so_far() {
    let c = mp_lower_bound_search(7, Strategy::Greedy, 0, 1).unwrap();
    assert!(c.budget_exhausted);
    // only pure embeddings were possible; su(3) still gives 8
    assert_eq!(c.dimension, 8);
    replay(&c).unwrap();
}

#[test]
fn tampered_certificates_fail_replay() {
    let c = mp_lower_bound_search(7, Strategy::Greedy, 10_000, 1).unwrap();
    assert!(!c.steps.is_empty());

    let mut bad = c.clone();
    let lambda = bad.steps[0].lambdas[0].clone();
    bad.steps[0].alphas[0] = lambda.wedge(&Form::covector(6, 6).unwrap()).unwrap();
    assert!(replay(&bad).is_err());

    let mut bad = c.clone();
    bad.dimension += 1;
    assert!(replay(&bad).is_err());

    let mut bad = c.clone();
    bad.steps[0].result_dim += 1;
    assert!(replay(&bad).is_err());

    let mut bad = c;
    bad.baseline = Baseline::SuEmbedding { m: 2 };
    assert!(replay(&bad).is_err());
}
