use holoprime::exterior::{binomial, mult_map, t_operator, Blade};
use holoprime::holonomy::scan::type1_scan;
use holoprime::holonomy::{g2_build_tables, spin7_build_tables};
use holoprime::linalg::rational::{int, Rational};
use holoprime::linalg::QMatrix;
use holoprime::primeness::{koszul_case, lambda_sampler, prime_check_invariant, r5_half_space, SymbolComplex};
use holoprime::{Form, Subspace};
use proptest::prelude::*;

/// A random form of degree `k` on `ℝⁿ` with small integer coefficients.
fn form_strategy(n: usize, k: usize) -> impl Strategy<Value = Form> {
    prop::collection::vec(-3i64..=3, binomial(n, k)).prop_map(move |c| {
        let coords: Vec<Rational> = c.into_iter().map(int).collect();
        Form::from_dense(n, k, &coords)
    })
}

fn nk_strategy(max_n: usize) -> impl Strategy<Value = (usize, usize)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), 0..=n))
}

fn any_form(max_n: usize) -> impl Strategy<Value = Form> {
    nk_strategy(max_n).prop_flat_map(|(n, k)| form_strategy(n, k))
}

fn nonzero_covector(n: usize) -> impl Strategy<Value = Form> {
    form_strategy(n, 1).prop_filter("λ ≠ 0", |f| !f.is_zero())
}

/// Invertible integer matrix with entries in `-2..=2`.
fn invertible(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), n)
        .prop_map(|rows| {
            rows.into_iter()
                .map(|r| r.into_iter().map(int).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
        .prop_filter("invertible", move |g| QMatrix::from_rows(g.clone()).unwrap().rank() == n)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, ..ProptestConfig::default() })]

    #[test]
    fn star_is_an_involution_up_to_sign(f in any_form(9)) {
        let (n, k) = (f.ambient(), f.degree());
        let sign = if (k * (n - k)) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(f.hodge_star().hodge_star(), f.scale(&int(sign)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn koszul_exactness((n, k) in nk_strategy(9), seed in any::<u64>()) {
        let lambda = lambda_sampler(n, 1, seed).remove(0);
        let case = koszul_case(&lambda, k).unwrap();
        prop_assert!(case.exact, "{:?}", case);
        // kernel ⊆ image, checked directly on vectors
        if k > 0 && k < n {
            let image = Subspace::from_vectors(n, k, &mult_map(&lambda, k - 1).unwrap().image_vectors());
            for v in mult_map(&lambda, k).unwrap().kernel_vectors() {
                prop_assert!(image.contains_vec(&v));
            }
        }
    }

    #[test]
    fn t_operator_adjointness(
        (n, k, alpha, beta, gamma) in (2usize..=8)
            .prop_flat_map(|n| (Just(n), 1..=n / 2))
            .prop_flat_map(|(n, k)| (
                Just(n),
                Just(k),
                form_strategy(n, n - 2 * k),
                form_strategy(n, k),
                form_strategy(n, k),
            ))
    ) {
        let t = t_operator(&alpha, k).unwrap();
        let apply = |f: &Form| Form::from_dense(n, k, &t.matrix().apply(&f.to_dense()).unwrap());
        let lhs = apply(&beta).inner(&gamma).unwrap();
        let rhs = beta.inner(&apply(&gamma)).unwrap();
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(lhs, rhs * sign);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    /// Exact verdicts force a vanishing Euler characteristic; the dual
    /// complex agrees with the type I complex.
    #[test]
    fn exact_complexes_have_zero_euler_characteristic(
        (n, k, forms, lambda) in (4usize..=6)
            .prop_flat_map(|n| (Just(n), 2..=n - 2))
            .prop_flat_map(|(n, k)| (
                Just(n),
                Just(k),
                prop::collection::vec(form_strategy(n, k), 1..=3),
                nonzero_covector(n),
            ))
    ) {
        let e = Subspace::span(n, k, &forms).unwrap();
        prop_assume!(!e.is_zero());
        let r = SymbolComplex::type1(&e).unwrap().at(&lambda).unwrap();
        if r.verdict {
            prop_assert_eq!(r.euler_characteristic, 0);
        }
        let d = SymbolComplex::dual(&e).unwrap().at(&lambda).unwrap();
        prop_assert_eq!(r.verdict, d.verdict);
    }
}

fn g2_cases() -> Vec<(Subspace, Option<Subspace>)> {
    let t = g2_build_tables().unwrap();
    vec![
        (t.component(4, 1).clone(), None),
        (t.component(2, 7).clone(), None),
        (t.component(2, 14).clone(), None),
        (t.component(3, 27).clone(), Some(t.component(2, 7).clone())),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn verdicts_are_invariant_under_substitution(g in invertible(7), h in invertible(5)) {
        let om1 = Form::covector(7, 1).unwrap();
        let moved_lambda = om1.substitute(&g).unwrap();
        for (e, f) in g2_cases() {
            let (before, after) = match &f {
                None => (
                    SymbolComplex::type1(&e).unwrap().at(&om1).unwrap(),
                    SymbolComplex::type1(&e.substitute(&g).unwrap()).unwrap().at(&moved_lambda).unwrap(),
                ),
                Some(f) => (
                    SymbolComplex::type2(f, &e).unwrap().at(&om1).unwrap(),
                    SymbolComplex::type2(&f.substitute(&g).unwrap(), &e.substitute(&g).unwrap())
                        .unwrap()
                        .at(&moved_lambda)
                        .unwrap(),
                ),
            };
            prop_assert_eq!(before.verdict, after.verdict);
            prop_assert_eq!(before.map_ranks, after.map_ranks);
            let p0 = prime_check_invariant(&e, &om1, false).unwrap();
            let p1 = prime_check_invariant(&e.substitute(&g).unwrap(), &moved_lambda, false).unwrap();
            prop_assert_eq!(p0.is_not_prime(), p1.is_not_prime());
        }
        let om5 = Form::covector(5, 1).unwrap();
        let e = r5_half_space(1).unwrap();
        let before = SymbolComplex::type1(&e).unwrap().at(&om5).unwrap();
        let after = SymbolComplex::type1(&e.substitute(&h).unwrap())
            .unwrap()
            .at(&om5.substitute(&h).unwrap())
            .unwrap();
        prop_assert_eq!(before.verdict, after.verdict);
    }
}

#[test]
fn type1_and_dual_agree_on_every_generator() {
    let g2 = g2_build_tables().unwrap();
    let spin7 = spin7_build_tables().unwrap();
    let mut count = 0;
    for entry in type1_scan(&g2.decomposition, 2..=5)
        .unwrap()
        .into_iter()
        .chain(type1_scan(&spin7.decomposition, 2..=6).unwrap())
    {
        assert_eq!(entry.type1_exact, entry.dual_exact, "{}", entry.generator);
        count += 1;
    }
    assert!(count >= 40, "{count}");
}

#[test]
fn blades_round_trip_through_indices() {
    for n in 1..=9 {
        for k in 0..=n {
            let all = Blade::all(n, k);
            assert_eq!(all.len(), binomial(n, k));
            for b in all {
                assert_eq!(Blade::new(n, &b.indices()).unwrap(), b);
            }
        }
    }
}
