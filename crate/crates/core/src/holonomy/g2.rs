//! G₂ on ℝ⁷: the 3-form φ, the splitting of `Λ*(ℝ⁷)` and the checks of the
//! G₂ complexes.
//!
//! The seven-dimensional pieces come from the explicit bases
//! `e²ᵢ = *(ψ∧ωⁱ)`, `e³ᵢ = *(φ∧ωⁱ)`, `e⁴ᵢ = φ∧ωⁱ`, `e⁵ᵢ = ψ∧ωⁱ` (unnormalised,
//! the constants below depend on it); the 14- and 27-dimensional pieces are
//! orthogonal complements inside their degree.

use serde_json::{json, Value};

use super::scan::{
    classification_items, classify, exhaustiveness_items, form_item, protocol_item, relation_item,
    type1_scan, type2_scan, Classified,
};
use super::{expect_dim, Component, Decomposition};
use crate::error::Result;
use crate::exterior::{skew_derivation, skew_matrix, stabilizer_algebra, Form};
use crate::linalg::rational::frac;
use crate::linalg::{Projector, Subspace};
use crate::primeness::SymbolComplex;
use crate::report::{CheckItem, SuiteReport};

const N: usize = 7;

pub const PHI_WORDS: [(i64, &str); 7] = [
    (1, "123"),
    (1, "145"),
    (1, "167"),
    (1, "246"),
    (-1, "257"),
    (-1, "347"),
    (-1, "356"),
];

/// The published list of `e⁵ᵢ`, used to cross-check the computed ones.
pub const E5_WORDS: [[(i64, &str); 3]; 7] = [
    [(1, "14567"), (1, "12367"), (1, "12345")],
    [(1, "24567"), (-1, "12357"), (1, "12346")],
    [(1, "34567"), (-1, "12356"), (-1, "12347")],
    [(1, "23467"), (1, "13457"), (-1, "12456")],
    [(1, "23567"), (1, "13456"), (-1, "12457")],
    [(1, "23456"), (-1, "13567"), (1, "12467")],
    [(1, "23457"), (-1, "13467"), (-1, "12567")],
];

#[derive(Clone, Debug)]
pub struct G2Tables {
    pub phi: Form,
    pub psi: Form,
    /// `e²ᵢ, e³ᵢ, e⁴ᵢ, e⁵ᵢ` for `i = 1..7`, stored at index `i − 1`.
    pub e2: Vec<Form>,
    pub e3: Vec<Form>,
    pub e4: Vec<Form>,
    pub e5: Vec<Form>,
    pub decomposition: Decomposition,
}

impl G2Tables {
    pub fn component(&self, k: usize, l: usize) -> &Subspace {
        self.decomposition.get(k, l).expect("G₂ component exists")
    }

    pub fn sum(&self, k: usize, labels: &[usize]) -> Subspace {
        self.decomposition.sum_of(k, labels).expect("G₂ components exist")
    }
}

pub fn g2_phi() -> Form {
    Form::from_words(N, &PHI_WORDS).expect("valid words")
}

fn times_covectors(f: &Form) -> Result<Vec<Form>> {
    (1..=N)
        .map(|i| f.wedge(&Form::covector(N, i)?))
        .collect()
}

pub fn g2_build_tables() -> Result<G2Tables> {
    let phi = g2_phi();
    let psi = phi.hodge_star();
    let e4 = times_covectors(&phi)?;
    let e5 = times_covectors(&psi)?;
    let e2: Vec<Form> = e5.iter().map(Form::hodge_star).collect();
    let e3: Vec<Form> = e4.iter().map(Form::hodge_star).collect();

    let l2_7 = Subspace::span(N, 2, &e2)?;
    let l3_1 = Subspace::span_one(&phi);
    let l3_7 = Subspace::span(N, 3, &e3)?;
    let l4_1 = Subspace::span_one(&psi);
    let l4_7 = Subspace::span(N, 4, &e4)?;
    let l5_7 = Subspace::span(N, 5, &e5)?;
    let l2_14 = l2_7.complement();
    let l3_27 = l3_1.sum(&l3_7)?.complement();
    let l4_27 = l4_1.sum(&l4_7)?.complement();
    let l5_14 = l5_7.complement();
    for (name, space, dim) in [
        ("Λ²₇", &l2_7, 7),
        ("Λ²₁₄", &l2_14, 14),
        ("Λ³₇", &l3_7, 7),
        ("Λ³₂₇", &l3_27, 27),
        ("Λ⁴₇", &l4_7, 7),
        ("Λ⁴₂₇", &l4_27, 27),
        ("Λ⁵₇", &l5_7, 7),
        ("Λ⁵₁₄", &l5_14, 14),
    ] {
        expect_dim(name, space, dim)?;
    }
    let c = |degree, label, space| Component { degree, label, space };
    let decomposition = Decomposition::new(
        N,
        vec![
            c(0, 1, Subspace::full(N, 0)),
            c(1, 7, Subspace::full(N, 1)),
            c(2, 7, l2_7),
            c(2, 14, l2_14),
            c(3, 1, l3_1),
            c(3, 7, l3_7),
            c(3, 27, l3_27),
            c(4, 1, l4_1),
            c(4, 7, l4_7),
            c(4, 27, l4_27),
            c(5, 7, l5_7),
            c(5, 14, l5_14),
            c(6, 7, Subspace::full(N, 6)),
            c(7, 1, Subspace::full(N, 7)),
        ],
    );
    decomposition.check_invariants()?;
    Ok(G2Tables {
        phi,
        psi,
        e2,
        e3,
        e4,
        e5,
        decomposition,
    })
}

fn name(k: usize, l: usize) -> String {
    super::component_name(k, l)
}

/// Dimensions, normalisations, the published `e⁵ᵢ` and the stabiliser of φ.
pub fn g2_table_items(t: &G2Tables) -> Result<Vec<CheckItem>> {
    let dec = &t.decomposition;
    let dims: Vec<Vec<usize>> = (0..=N).map(|k| dec.dims(k)).collect();
    let expected: Vec<Vec<usize>> = vec![
        vec![1],
        vec![7],
        vec![7, 14],
        vec![1, 7, 27],
        vec![1, 7, 27],
        vec![7, 14],
        vec![7],
        vec![1],
    ];
    let mut items = vec![CheckItem::new(
        "g2.dims",
        "component dimensions are (1),(7),(7,14),(1,7,27),(1,7,27),(7,14),(7),(1)",
        dims == expected,
        json!({ "computed": dims }),
    )];
    let vol7 = Form::volume(N).scale(&frac(7, 1));
    items.push(CheckItem::new(
        "g2.normalisation",
        "φ∧ψ = 7 vol and |φ|² = |ψ|² = 7",
        t.phi.wedge(&t.psi)? == vol7
            && t.phi.norm_squared() == frac(7, 1)
            && t.psi.norm_squared() == frac(7, 1),
        Value::Null,
    ));
    let published: Vec<Form> = E5_WORDS
        .iter()
        .map(|w| Form::from_words(N, w))
        .collect::<Result<_>>()?;
    items.push(form_item(
        "g2.e5_1",
        "e⁵₁ = ψ∧ω¹ = ω^{14567} + ω^{12367} + ω^{12345}",
        &t.e5[0],
        &published[0],
    ));
    let mismatched: Vec<usize> = (0..7).filter(|&i| published[i] != t.e5[i]).map(|i| i + 1).collect();
    let published_in_l5_7: Vec<bool> = published
        .iter()
        .map(|f| t.component(5, 7).contains(f))
        .collect::<Result<_>>()?;
    items.push(CheckItem::informational(
        "g2.e5_published_list",
        "ψ∧ωⁱ agrees with every printed e⁵ᵢ, i = 1..7",
        mismatched.is_empty(),
        json!({
            "mismatched_indices": mismatched,
            "printed_in_lambda5_7": published_in_l5_7,
            "computed": t.e5,
        }),
    ));
    items.push(CheckItem::new(
        "g2.decomposition_invariants",
        "components are pairwise orthogonal, fill each degree, and * maps (k,l) onto (7−k,l)",
        dec.check_invariants().is_ok(),
        Value::Null,
    ));
    let g2 = stabilizer_algebra(&t.phi)?;
    let invariant = stabilizer_preserves(&g2, dec)?;
    items.push(CheckItem::new(
        "g2.stabilizer",
        "the stabiliser of φ in so(7) is Λ²₁₄ and preserves every component",
        &g2 == t.component(2, 14) && invariant,
        json!({ "stabilizer_dim": g2.dim() }),
    ));
    Ok(items)
}

/// Whether every element of the Lie algebra `algebra ⊂ Λ² ≅ so(n)` maps each
/// component into itself.
pub(crate) fn stabilizer_preserves(algebra: &Subspace, dec: &Decomposition) -> Result<bool> {
    for x in algebra.basis_forms() {
        let a = skew_matrix(&x)?;
        for c in dec.components() {
            for v in c.space.basis_forms() {
                if !c.space.contains(&skew_derivation(&a, &v)?)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn g2_verify_relations(t: &G2Tables) -> Result<Vec<CheckItem>> {
    let full = |k| Subspace::full(N, k);
    let cases: Vec<(&str, String, Subspace, String, Subspace)> = vec![
        ("g2.rel.2_7", name(2, 7), t.component(2, 7).clone(), "Λ^3".into(), full(3)),
        (
            "g2.rel.2_14",
            name(2, 14),
            t.component(2, 14).clone(),
            format!("{}⊕{}", name(3, 7), name(3, 27)),
            t.sum(3, &[7, 27]),
        ),
        ("g2.rel.3_7", name(3, 7), t.component(3, 7).clone(), "Λ^4".into(), full(4)),
        (
            "g2.rel.3_27",
            name(3, 27),
            t.component(3, 27).clone(),
            format!("{}⊕{}", name(4, 7), name(4, 27)),
            t.sum(4, &[7, 27]),
        ),
        ("g2.rel.4_7", name(4, 7), t.component(4, 7).clone(), "Λ^5".into(), full(5)),
        ("g2.rel.4_27", name(4, 27), t.component(4, 27).clone(), "Λ^5".into(), full(5)),
        ("g2.rel.5_7", name(5, 7), t.component(5, 7).clone(), "Λ^6".into(), full(6)),
        ("g2.rel.5_14", name(5, 14), t.component(5, 14).clone(), "Λ^6".into(), full(6)),
        ("g2.rel.phi", "⟨φ⟩".into(), t.component(3, 1).clone(), name(4, 7), t.component(4, 7).clone()),
    ];
    cases
        .iter()
        .map(|(id, ln, l, rn, r)| relation_item(id, ln, l, rn, r))
        .collect()
}

/// The published list of G₂-invariant prime subspaces.
pub fn g2_expected_primes() -> Vec<String> {
    vec![
        name(2, 7),
        name(2, 14),
        name(3, 1),
        name(3, 7),
        format!("{}⊕{}", name(3, 1), name(3, 7)),
        name(4, 1),
    ]
}

pub fn g2_classify_prime_subspaces(t: &G2Tables) -> Result<(Vec<Classified>, Vec<CheckItem>)> {
    let classified = classify(&t.decomposition, 2..=N - 1)?;
    let items = classification_items("g2", &classified, &g2_expected_primes());
    Ok((classified, items))
}

fn proj(space: &Subspace, f: &Form) -> Result<Form> {
    Projector::new(space).project(f)
}

/// `x·ω¹`, the right multiplication used throughout the constant checks.
fn times_omega1(x: &Form) -> Result<Form> {
    x.wedge(&Form::covector(x.ambient(), 1)?)
}

/// The explicit projection constants of the G₂ complexes.
pub fn g2_constant_items(t: &G2Tables) -> Result<Vec<CheckItem>> {
    let half = frac(1, 2);
    let p1_space = t.sum(3, &[1, 7]);
    let p2_space = t.component(4, 1).clone();
    let p3_space = t.sum(4, &[1, 7]);
    let mut items = vec![form_item(
        "g2.const.p1_e2_1",
        "p₁(e²₁·ω¹) = 3/7 φ",
        &proj(&p1_space, &times_omega1(&t.e2[0])?)?,
        &t.phi.scale(&frac(3, 7)),
    )];
    for i in 1..=3 {
        let (even, odd) = (2 * i, 2 * i + 1);
        items.push(form_item(
            &format!("g2.const.p1_e2_{even}"),
            &format!("p₁(e²_{even}·ω¹) = 1/2 e³_{odd}"),
            &proj(&p1_space, &times_omega1(&t.e2[even - 1])?)?,
            &t.e3[odd - 1].scale(&half),
        ));
        items.push(form_item(
            &format!("g2.const.p1_e2_{odd}"),
            &format!("p₁(e²_{odd}·ω¹) = −1/2 e³_{even}"),
            &proj(&p1_space, &times_omega1(&t.e2[odd - 1])?)?,
            &t.e3[even - 1].scale(&-half.clone()),
        ));
    }
    items.push(form_item(
        "g2.const.p2_e3_1",
        "p₂(e³₁·ω¹) = −4/7 ψ",
        &proj(&p2_space, &times_omega1(&t.e3[0])?)?,
        &t.psi.scale(&frac(-4, 7)),
    ));
    items.push(form_item(
        "g2.const.p3_phi",
        "p₃(φ·ω¹) = e⁴₁",
        &proj(&p3_space, &times_omega1(&t.phi)?)?,
        &t.e4[0],
    ));
    items.push(form_item(
        "g2.const.p3_e3_1",
        "p₃(e³₁·ω¹) = −4/7 ψ",
        &proj(&p3_space, &times_omega1(&t.e3[0])?)?,
        &t.psi.scale(&frac(-4, 7)),
    ));
    for i in 1..=3 {
        let (even, odd) = (2 * i, 2 * i + 1);
        items.push(form_item(
            &format!("g2.const.p3_e3_{even}"),
            &format!("p₃(e³_{even}·ω¹) = −1/2 e⁴_{odd}"),
            &proj(&p3_space, &times_omega1(&t.e3[even - 1])?)?,
            &t.e4[odd - 1].scale(&-half.clone()),
        ));
        items.push(form_item(
            &format!("g2.const.p3_e3_{odd}"),
            &format!("p₃(e³_{odd}·ω¹) = 1/2 e⁴_{even}"),
            &proj(&p3_space, &times_omega1(&t.e3[odd - 1])?)?,
            &t.e4[even - 1].scale(&half),
        ));
    }
    Ok(items)
}

/// `ω¹Λ⁴ ∩ Λ⁵₇ = ⟨ω¹∧ψ⟩`.
pub fn g2_claim_item(t: &G2Tables) -> Result<CheckItem> {
    let omega1 = Form::covector(N, 1)?;
    let image = Subspace::full(N, 4).wedge_covector(&omega1)?;
    let meet = image.intersect(t.component(5, 7))?;
    let expected = Subspace::span_one(&omega1.wedge(&t.psi)?);
    Ok(CheckItem::new(
        "g2.claim.omega1_meet",
        "ω¹Λ⁴ ∩ Λ⁵₇ = ⟨ω¹∧ψ⟩, of dimension 1",
        meet.dim() == 1 && meet == expected,
        json!({ "dim": meet.dim() }),
    ))
}

/// The two candidate type II maps between the remaining prime pieces are
/// not isomorphisms.
pub fn g2_obstruction_items(t: &G2Tables) -> Result<Vec<CheckItem>> {
    let p4 = proj(t.component(4, 1), &times_omega1(&t.phi)?)?;
    let mut killed = Vec::new();
    for i in 1..=N {
        let w = t.e3[i - 1].wedge(&Form::covector(N, i)?)?;
        killed.push(proj(t.component(4, 7), &w)?.is_zero());
    }
    Ok(vec![
        CheckItem::new(
            "g2.obstruction.p4",
            "p₄λ = 0 on ⟨φ⟩ → ⟨ψ⟩ at λ = ω¹",
            p4.is_zero(),
            Value::Null,
        ),
        CheckItem::new(
            "g2.obstruction.p5",
            "p₅(e³ᵢ·ωⁱ) = 0 in Λ⁴₇ for i = 1..7",
            killed.iter().all(|b| *b),
            json!({ "per_index": killed }),
        ),
    ])
}

/// Full G₂ suite: tables, relations, classification, the three published
/// complexes under the exactness protocol, the constants, and the scans
/// showing no other complexes arise.
pub fn g2_suite(samples: usize, seed: u64) -> Result<SuiteReport> {
    let t = g2_build_tables()?;
    let mut report = SuiteReport::new("g2", seed, samples);
    report.extend(g2_table_items(&t)?);
    report.extend(g2_verify_relations(&t)?);
    let (classified, items) = g2_classify_prime_subspaces(&t)?;
    report.extend(items);

    let psi_line = t.component(4, 1).clone();
    report.push(protocol_item(
        "g2.complex.type1_psi",
        "0→Λ⁰→Λ¹→Λ²→Λ³→Λ⁴/⟨ψ⟩→Λ⁵/(ψΛ¹)→0 is exact (quotients ≅ Λ⁴₇⊕Λ⁴₂₇ and Λ⁵₁₄)",
        &SymbolComplex::type1(&psi_line)?,
        N,
        Some(&[1, 7, 21, 35, 34, 14]),
        samples,
        seed,
    )?);
    report.push(CheckItem::new(
        "g2.complex.type1_psi.stage",
        "ψ·Λ¹ = Λ⁵₇, so the last stage is Λ⁵₁₄",
        psi_line.product_space(1)? == *t.component(5, 7),
        Value::Null,
    ));
    report.push(g2_claim_item(&t)?);
    report.push(protocol_item(
        "g2.complex.type2_a",
        "0→Λ²₇→Λ³/Λ³₂₇→Λ⁴/(Λ³₂₇Λ¹)→0, i.e. Λ²₇→⟨φ⟩⊕Λ³₇→⟨ψ⟩, is exact",
        &SymbolComplex::type2(t.component(2, 7), t.component(3, 27))?,
        N,
        Some(&[7, 8, 1]),
        samples,
        seed.wrapping_add(1),
    )?);
    report.push(protocol_item(
        "g2.complex.type2_b",
        "0→⟨φ⟩⊕Λ³₇→Λ⁴/Λ⁴₂₇→0, i.e. ⟨φ⟩⊕Λ³₇→⟨ψ⟩⊕Λ⁴₇, is exact",
        &SymbolComplex::type2(&t.sum(3, &[1, 7]), t.component(4, 27))?,
        N,
        Some(&[8, 8]),
        samples,
        seed.wrapping_add(2),
    )?);
    report.push(protocol_item(
        "g2.complex.type1_adjoint",
        "the type I complex generated by Λ²₁₄ is exact",
        &SymbolComplex::type1(t.component(2, 14))?,
        N,
        Some(&[1, 7, 7, 1]),
        samples,
        seed.wrapping_add(3),
    )?);
    report.extend(g2_constant_items(&t)?);
    report.extend(g2_obstruction_items(&t)?);

    let scan1 = type1_scan(&t.decomposition, 2..=N - 1)?;
    let scan2 = type2_scan(&t.decomposition, &classified)?;
    report.extend(exhaustiveness_items(
        "g2",
        &scan1,
        &scan2,
        &[name(2, 14), name(4, 1)],
        &[
            (name(2, 7), name(3, 27)),
            (format!("{}⊕{}", name(3, 1), name(3, 7)), name(4, 27)),
        ],
    ));
    Ok(report)
}
