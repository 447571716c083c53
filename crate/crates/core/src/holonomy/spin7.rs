//! Spin(7) on ℝ⁸: the Cayley form Ω, the splitting of `Λ*(ℝ⁸)` and the
//! checks of the Spin(7) complexes, including the explicit `p₂` matrix.
//!
//! `Λ²` splits into the two eigenspaces of `T_Ω = *(Ω∧·)`; they are told
//! apart by dimension, never by eigenvalue. `Λ⁴₇` is the image of
//! `α ↦ ω¹∧α + *₇α` on `Λ³₇` of the ℝ⁷ factor on coordinates 2..8, whose φ
//! is the G₂ form with every index raised by one.

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use super::g2::{g2_phi, stabilizer_preserves};
use super::scan::{
    classification_items, classify, exhaustiveness_items, form_item, protocol_item, relation_item,
    type1_scan, type2_scan, Classified,
};
use super::{expect_dim, Component, Decomposition};
use crate::error::{Error, Result};
use crate::exterior::{eigenspace, stabilizer_algebra, t_operator, trace, Blade, Form};
use crate::json::rational_string;
use crate::linalg::rational::{dot, frac, int, Rational, SparseVec};
use crate::linalg::{Projector, QMatrix, Subspace};
use crate::primeness::SymbolComplex;
use crate::report::{CheckItem, SuiteReport};

const N: usize = 8;

pub const OMEGA_WORDS: [(i64, &str); 14] = [
    (1, "1234"),
    (1, "1256"),
    (1, "1278"),
    (1, "1357"),
    (-1, "1368"),
    (-1, "1458"),
    (-1, "1467"),
    (-1, "2358"),
    (-1, "2367"),
    (-1, "2457"),
    (1, "2468"),
    (1, "3456"),
    (1, "3478"),
    (1, "5678"),
];

/// The published basis `α₁..α₇` of the seven-dimensional part of `Λ²`.
pub const ALPHA_WORDS: [[(i64, &str); 4]; 7] = [
    [(1, "12"), (1, "34"), (1, "56"), (1, "78")],
    [(1, "13"), (-1, "24"), (1, "57"), (-1, "68")],
    [(1, "14"), (1, "23"), (-1, "58"), (-1, "67")],
    [(1, "15"), (-1, "26"), (-1, "37"), (1, "48")],
    [(1, "16"), (1, "25"), (1, "38"), (1, "47")],
    [(1, "17"), (-1, "28"), (1, "35"), (-1, "46")],
    [(1, "18"), (1, "27"), (-1, "36"), (-1, "45")],
];

/// The published basis `β₁..β₇` of `Λ⁴₇`.
pub const BETA_WORDS: [[(i64, &str); 8]; 7] = [
    [(1, "2467"), (1, "2458"), (1, "2368"), (-1, "2357"), (-1, "1358"), (-1, "1367"), (-1, "1457"), (1, "1468")],
    [(1, "3467"), (1, "3458"), (1, "2378"), (1, "2356"), (1, "1258"), (1, "1267"), (1, "1456"), (1, "1478")],
    [(1, "3457"), (-1, "3468"), (1, "2478"), (1, "2456"), (1, "1257"), (-1, "1268"), (-1, "1356"), (-1, "1378")],
    [(1, "2345"), (-1, "4567"), (-1, "3568"), (1, "2578"), (-1, "1238"), (-1, "1247"), (1, "1346"), (1, "1678")],
    [(1, "4568"), (-1, "3567"), (1, "2678"), (1, "2346"), (-1, "1237"), (1, "1248"), (-1, "1345"), (-1, "1578")],
    [(1, "4578"), (1, "3678"), (1, "2567"), (1, "2347"), (1, "1236"), (1, "1245"), (1, "1348"), (1, "1568")],
    [(1, "3578"), (-1, "4678"), (1, "2568"), (1, "2348"), (1, "1235"), (-1, "1246"), (-1, "1347"), (-1, "1567")],
];

/// One eigenspace of `T_Ω` on `Λ²`.
#[derive(Clone, Debug, Serialize)]
pub struct Eigenpiece {
    pub eigenvalue: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct Spin7Tables {
    pub omega: Form,
    pub alpha: Vec<Form>,
    pub beta: Vec<Form>,
    /// `ωᵏ∧Ω`, `k = 1..8`, a basis of `Λ⁵₈`.
    pub omega_k: Vec<Form>,
    /// `*(Ω∧ωᵏ)`, `k = 1..8`, a basis of `Λ³₈`.
    pub star_omega_k: Vec<Form>,
    /// Eigenvalue of `T_Ω` on the 7- and on the 21-dimensional piece.
    pub eigenvalue_7: Rational,
    pub eigenvalue_21: Rational,
    pub decomposition: Decomposition,
}

impl Spin7Tables {
    pub fn component(&self, k: usize, l: usize) -> &Subspace {
        self.decomposition.get(k, l).expect("Spin(7) component exists")
    }

    pub fn sum(&self, k: usize, labels: &[usize]) -> Subspace {
        self.decomposition.sum_of(k, labels).expect("Spin(7) components exist")
    }

    pub fn lambda_plus(&self) -> Subspace {
        self.sum(4, &[1, 7, 27])
    }

    pub fn lambda_minus(&self) -> &Subspace {
        self.component(4, 35)
    }
}

pub fn spin7_omega() -> Form {
    Form::from_words(N, &OMEGA_WORDS).expect("valid words")
}

fn words<const M: usize>(list: &[[(i64, &str); M]]) -> Result<Vec<Form>> {
    list.iter().map(|w| Form::from_words(N, w)).collect()
}

/// `i(α) = ω¹∧α + *₇α` over the basis `e³ᵢ = *₇(φ∧ωⁱ)` of `Λ³₇(ℝ⁷)`, so that
/// `*₇e³ᵢ = φ∧ωⁱ`.
fn lambda4_7_generators() -> Result<Vec<Form>> {
    let phi = g2_phi();
    let omega1 = Form::covector(N, 1)?;
    (1..=7)
        .map(|i| {
            let e4 = phi.wedge(&Form::covector(7, i)?)?;
            let e3 = e4.hodge_star();
            omega1.wedge(&e3.shift(1, N)?)?.try_add(&e4.shift(1, N)?)
        })
        .collect()
}

pub fn spin7_build_tables() -> Result<Spin7Tables> {
    let omega = spin7_omega();
    if omega.hodge_star() != omega {
        return Err(Error::Consistency("Ω is not self-dual".into()));
    }
    let t = t_operator(&omega, 2)?;
    let (mut l2_7, mut l2_21) = (None, None);
    let (mut ev7, mut ev21) = (None, None);
    for c in [-1i64, 3] {
        let space = eigenspace(&t, &int(c))?;
        match space.dim() {
            7 => {
                l2_7 = Some(space);
                ev7 = Some(int(c));
            }
            21 => {
                l2_21 = Some(space);
                ev21 = Some(int(c));
            }
            d => {
                return Err(Error::Consistency(format!(
                    "T_Ω eigenvalue {c} has multiplicity {d}"
                )))
            }
        }
    }
    let missing = || Error::Consistency("T_Ω does not split Λ² into 7 + 21".into());
    let (l2_7, l2_21) = (l2_7.ok_or_else(missing)?, l2_21.ok_or_else(missing)?);

    let star4 = t_operator(&Form::one(N), 4)?;
    let plus = eigenspace(&star4, &int(1))?;
    let minus = eigenspace(&star4, &int(-1))?;
    let l4_1 = Subspace::span_one(&omega);
    let l4_7 = Subspace::span(N, 4, &lambda4_7_generators()?)?;
    let l4_27 = plus.intersect(&l4_1.sum(&l4_7)?.complement())?;

    let omega_k: Vec<Form> = (1..=N)
        .map(|k| Form::covector(N, k)?.wedge(&omega))
        .collect::<Result<_>>()?;
    let star_omega_k: Vec<Form> = (1..=N)
        .map(|k| Ok(omega.wedge(&Form::covector(N, k)?)?.hodge_star()))
        .collect::<Result<_>>()?;
    let l5_8 = Subspace::span(N, 5, &omega_k)?;
    let l3_8 = Subspace::span(N, 3, &star_omega_k)?;
    let l3_48 = l3_8.complement();
    let l5_48 = l5_8.complement();
    let l6_7 = l2_7.hodge_star();
    let l6_21 = l2_21.hodge_star();
    for (name, space, dim) in [
        ("Λ⁴₇", &l4_7, 7),
        ("Λ⁴₂₇", &l4_27, 27),
        ("Λ⁻", &minus, 35),
        ("Λ³₈", &l3_8, 8),
        ("Λ⁵₈", &l5_8, 8),
    ] {
        expect_dim(name, space, dim)?;
    }
    if !plus.contains_space(&l4_7)? {
        return Err(Error::Consistency("i(Λ³₇) is not self-dual".into()));
    }
    let c = |degree, label, space| Component { degree, label, space };
    let decomposition = Decomposition::new(
        N,
        vec![
            c(0, 1, Subspace::full(N, 0)),
            c(1, 8, Subspace::full(N, 1)),
            c(2, 7, l2_7),
            c(2, 21, l2_21),
            c(3, 8, l3_8),
            c(3, 48, l3_48),
            c(4, 1, l4_1),
            c(4, 7, l4_7),
            c(4, 27, l4_27),
            c(4, 35, minus),
            c(5, 8, l5_8),
            c(5, 48, l5_48),
            c(6, 7, l6_7),
            c(6, 21, l6_21),
            c(7, 8, Subspace::full(N, 7)),
            c(8, 1, Subspace::full(N, 8)),
        ],
    );
    decomposition.check_invariants()?;
    Ok(Spin7Tables {
        omega,
        alpha: words(&ALPHA_WORDS)?,
        beta: words(&BETA_WORDS)?,
        omega_k,
        star_omega_k,
        eigenvalue_7: ev7.expect("set with l2_7"),
        eigenvalue_21: ev21.expect("set with l2_21"),
        decomposition,
    })
}

fn name(k: usize, l: usize) -> String {
    super::component_name(k, l)
}

fn plus_name() -> String {
    format!("{}⊕{}⊕{}", name(4, 1), name(4, 7), name(4, 27))
}

pub fn spin7_table_items(t: &Spin7Tables) -> Result<Vec<CheckItem>> {
    let dec = &t.decomposition;
    let dims: Vec<Vec<usize>> = (0..=N).map(|k| dec.dims(k)).collect();
    let expected: Vec<Vec<usize>> = vec![
        vec![1],
        vec![8],
        vec![7, 21],
        vec![8, 48],
        vec![1, 7, 27, 35],
        vec![8, 48],
        vec![7, 21],
        vec![8],
        vec![1],
    ];
    let tr = trace(&t_operator(&t.omega, 2)?)?;
    let alpha1_image = t.alpha[0]
        .wedge(&t.omega)?
        .hodge_star();
    let alpha1_eigen = if alpha1_image == t.alpha[0].scale(&int(3)) {
        Some(3)
    } else if alpha1_image == t.alpha[0].scale(&int(-1)) {
        Some(-1)
    } else {
        None
    };
    let spectrum = vec![
        Eigenpiece {
            eigenvalue: rational_string(&t.eigenvalue_7),
            multiplicity: 7,
        },
        Eigenpiece {
            eigenvalue: rational_string(&t.eigenvalue_21),
            multiplicity: 21,
        },
    ];
    let mut values = [t.eigenvalue_7.clone(), t.eigenvalue_21.clone()];
    values.sort();
    let mut items = vec![
        CheckItem::new(
            "spin7.dims",
            "component dimensions are (1),(8),(7,21),(8,48),(1,7,27,35),(8,48),(7,21),(8),(1)",
            dims == expected,
            json!({ "computed": dims }),
        ),
        CheckItem::new(
            "spin7.t_omega.spectrum",
            "T_Ω on Λ² has exactly the eigenvalues −1 and 3, with multiplicities 7 and 21",
            values == [int(-1), int(3)],
            json!({ "spectrum": spectrum, "trace": rational_string(&tr) }),
        ),
        CheckItem::informational(
            "spin7.t_omega.published_labels",
            "Λ²₇ is the −1 eigenspace and Λ²₂₁ the 3 eigenspace",
            t.eigenvalue_7 == int(-1) && t.eigenvalue_21 == int(3),
            json!({
                "measured": spectrum,
                "alpha_1_eigenvalue": alpha1_eigen,
                "trace": rational_string(&tr),
                "note": "a 7-dimensional −1 eigenspace and 21-dimensional 3 eigenspace would force trace 56; the measured trace is 0",
            }),
        ),
        CheckItem::new(
            "spin7.omega",
            "*Ω = Ω and |Ω|² = 14",
            t.omega.hodge_star() == t.omega && t.omega.norm_squared() == int(14),
            Value::Null,
        ),
        CheckItem::new(
            "spin7.alpha_basis",
            "the published α₁..α₇ span the 7-dimensional part of Λ²",
            Subspace::span(N, 2, &t.alpha)? == *t.component(2, 7),
            Value::Null,
        ),
        CheckItem::new(
            "spin7.beta_basis",
            "the published β₁..β₇ span Λ⁴₇ = i(Λ³₇(ℝ⁷))",
            Subspace::span(N, 4, &t.beta)? == *t.component(4, 7),
            Value::Null,
        ),
        CheckItem::new(
            "spin7.decomposition_invariants",
            "components are pairwise orthogonal, fill each degree, and * maps (k,l) onto (8−k,l)",
            dec.check_invariants().is_ok(),
            Value::Null,
        ),
    ];
    let spin7 = stabilizer_algebra(&t.omega)?;
    items.push(CheckItem::new(
        "spin7.stabilizer",
        "the stabiliser of Ω in so(8) is the 21-dimensional part of Λ² and preserves every component",
        &spin7 == t.component(2, 21) && stabilizer_preserves(&spin7, dec)?,
        json!({ "stabilizer_dim": spin7.dim() }),
    ));
    Ok(items)
}

pub fn spin7_verify_relations(t: &Spin7Tables) -> Result<Vec<CheckItem>> {
    let full = |k| Subspace::full(N, k);
    let perp = |k, l| t.component(k, l).complement();
    let cases: Vec<(&str, String, Subspace, String, Subspace)> = vec![
        ("spin7.rel.2_7", name(2, 7), t.component(2, 7).clone(), "Λ^3".into(), full(3)),
        ("spin7.rel.2_21", name(2, 21), t.component(2, 21).clone(), "Λ^3".into(), full(3)),
        ("spin7.rel.3_8", name(3, 8), t.component(3, 8).clone(), format!("({})^⊥", name(4, 27)), perp(4, 27)),
        ("spin7.rel.3_48", name(3, 48), t.component(3, 48).clone(), format!("({})^⊥", name(4, 1)), perp(4, 1)),
        ("spin7.rel.4_7", name(4, 7), t.component(4, 7).clone(), "Λ^5".into(), full(5)),
        ("spin7.rel.4_plus", "Λ^+".into(), t.lambda_plus(), "Λ^5".into(), full(5)),
        ("spin7.rel.4_minus", "Λ^-".into(), t.lambda_minus().clone(), "Λ^5".into(), full(5)),
        ("spin7.rel.4_27", name(4, 27), t.component(4, 27).clone(), name(5, 48), t.component(5, 48).clone()),
        ("spin7.rel.5_8", name(5, 8), t.component(5, 8).clone(), "Λ^6".into(), full(6)),
        ("spin7.rel.5_48", name(5, 48), t.component(5, 48).clone(), "Λ^6".into(), full(6)),
    ];
    cases
        .iter()
        .map(|(id, ln, l, rn, r)| relation_item(id, ln, l, rn, r))
        .collect()
}

/// The published list: Λ²₇, Λ²₂₁, Λ³₈, Λ⁻, every nonzero invariant subspace of
/// Λ⁺, and Λ⁶₇.
pub fn spin7_expected_primes() -> Vec<String> {
    let mut v = vec![name(2, 7), name(2, 21), name(3, 8), name(4, 35), name(6, 7)];
    let plus = [1, 7, 27];
    for mask in 1..8u32 {
        let chosen: Vec<String> = plus
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &l)| name(4, l))
            .collect();
        v.push(chosen.join("⊕"));
    }
    v
}

pub fn spin7_classify_prime_subspaces(t: &Spin7Tables) -> Result<(Vec<Classified>, Vec<CheckItem>)> {
    let classified = classify(&t.decomposition, 2..=N - 1)?;
    let items = classification_items("spin7", &classified, &spin7_expected_primes());
    Ok((classified, items))
}

fn proj(space: &Subspace, f: &Form) -> Result<Form> {
    Projector::new(space).project(f)
}

fn omega1() -> Form {
    Form::covector(N, 1).expect("n = 8")
}

/// `p₁(ω¹∧(ω^I − *ω^I)) = 1/7 ωᵏ∧Ω` whenever `⟨ωᵏΩ, ω^{1I}⟩ = 1` or
/// `⟨ωᵏΩ, ω¹∧*ω^I⟩ = −1`, over all 4-subsets `I ⊂ {2..8}`, together with the
/// surjectivity it implies.
pub fn spin7_p1_items(t: &Spin7Tables) -> Result<Vec<CheckItem>> {
    let p1 = Projector::new(t.component(5, 8));
    let w1 = omega1();
    let mut cases = 0;
    let mut failures = Vec::new();
    for b in Blade::all(N, 4) {
        if b.contains(1) {
            continue;
        }
        let wi = Form::from_blade(b);
        let swi = wi.hodge_star();
        let minus = wi.try_sub(&swi)?;
        let image = p1.project(&w1.wedge(&minus)?)?;
        let lhs1 = w1.wedge(&wi)?;
        let lhs2 = w1.wedge(&swi)?;
        for (k, wk) in t.omega_k.iter().enumerate() {
            if wk.inner(&lhs1)? == int(1) || wk.inner(&lhs2)? == int(-1) {
                cases += 1;
                if image != wk.scale(&frac(1, 7)) {
                    failures.push(json!({ "blade": b.indices(), "k": k + 1, "image": image }));
                }
            }
        }
    }
    let rank_on = |space: &Subspace| -> Result<usize> {
        let images: Vec<SparseVec> = space
            .basis_forms()
            .iter()
            .map(|a| Ok(p1.project(&w1.wedge(a)?)?.to_sparse()))
            .collect::<Result<_>>()?;
        Ok(Subspace::from_vectors(N, 5, &images).dim())
    };
    let rank_minus = rank_on(t.lambda_minus())?;
    let rank_all = rank_on(&t.sum(4, &[1, 7, 35]))?;
    Ok(vec![
        CheckItem::new(
            "spin7.const.p1",
            "p₁(ω¹(ω^I − *ω^I)) = 1/7 ωᵏΩ in every case singled out by the pairing condition",
            cases > 0 && failures.is_empty(),
            json!({ "cases": cases, "failures": failures }),
        ),
        CheckItem::new(
            "spin7.p1.surjective",
            "p₁∘ω¹ maps Λ⁻, and hence ⟨Ω⟩⊕Λ⁴₇⊕Λ⁻, onto Λ⁵₈",
            rank_minus == 8 && rank_all == 8,
            json!({ "rank_on_minus": rank_minus, "rank_on_sum": rank_all }),
        ),
    ])
}

/// A basis with its matrix, every entry an exact rational string.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixExport {
    pub basis_kind: String,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// For the projected-blade bases, the blade whose projection gives each
    /// basis vector.
    pub domain_blades: Option<Vec<Vec<usize>>>,
    pub codomain_blades: Option<Vec<Vec<usize>>>,
    pub domain_basis: Vec<Form>,
    pub codomain_basis: Vec<Form>,
    pub entries: Vec<Vec<String>>,
}

/// The matrix of `p₂∘ω¹: Λ³₄₈ → Λ⁴₂₇` in two pairs of bases.
#[derive(Clone, Debug, Serialize)]
pub struct P2Matrix {
    pub map: String,
    pub blade_adapted: MatrixExport,
    pub projected_blade: MatrixExport,
}

/// Coordinates of `v` in an arbitrary basis of the span containing it,
/// through the Gram matrix.
fn coordinates_in(basis: &[SparseVec], gram_inv: &QMatrix, v: &SparseVec) -> Vec<Rational> {
    let rhs: Vec<Rational> = basis.iter().map(|b| dot(b, v)).collect();
    (0..basis.len())
        .map(|i| {
            rhs.iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (j, r)| acc + gram_inv.get(i, j) * r)
        })
        .collect()
}

fn gram_inverse(basis: &[SparseVec]) -> Result<QMatrix> {
    let rows: Vec<Vec<Rational>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| dot(a, b)).collect())
        .collect();
    QMatrix::from_rows(rows)?
        .inverse()
        .ok_or_else(|| Error::Consistency("basis is dependent".into()))
}

/// The first blades (in colex order) whose projections onto `space` are
/// independent, with those projections.
fn projected_blade_basis(space: &Subspace) -> (Vec<Vec<usize>>, Vec<SparseVec>) {
    let proj = space.projector();
    let mut blades = Vec::new();
    let mut vectors: Vec<SparseVec> = Vec::new();
    for b in Blade::all(space.ambient(), space.degree()) {
        if vectors.len() == space.dim() {
            break;
        }
        let v = proj.project_vec(&Form::from_blade(b).to_sparse());
        let mut trial = vectors.clone();
        trial.push(v.clone());
        if Subspace::from_vectors(space.ambient(), space.degree(), &trial).dim() == trial.len() {
            blades.push(b.indices());
            vectors.push(v);
        }
    }
    (blades, vectors)
}

/// Index lists labelling the domain and codomain basis vectors.
type BladeLabels = (Vec<Vec<usize>>, Vec<Vec<usize>>);

fn export(
    kind: &str,
    domain: &[SparseVec],
    codomain: &[SparseVec],
    blades: Option<BladeLabels>,
    target: &Subspace,
) -> Result<MatrixExport> {
    let w1 = omega1();
    let proj = target.projector();
    let gram_inv = gram_inverse(codomain)?;
    let mut m = QMatrix::zeros(codomain.len(), domain.len());
    for (j, x) in domain.iter().enumerate() {
        let image = proj.project(&w1.wedge(&Form::from_sparse(N, 3, x))?)?;
        let coords = coordinates_in(codomain, &gram_inv, &image.to_sparse());
        for (i, c) in coords.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    let (db, cb) = match blades {
        Some((d, c)) => (Some(d), Some(c)),
        None => (None, None),
    };
    Ok(MatrixExport {
        basis_kind: kind.into(),
        rows: m.nrows(),
        cols: m.ncols(),
        rank: m.rank(),
        domain_blades: db,
        codomain_blades: cb,
        domain_basis: domain.iter().map(|v| Form::from_sparse(N, 3, v)).collect(),
        codomain_basis: codomain.iter().map(|v| Form::from_sparse(N, 4, v)).collect(),
        entries: (0..m.nrows())
            .map(|i| m.row(i).iter().map(rational_string).collect())
            .collect(),
    })
}

/// Assembles `p₂∘ω¹: Λ³₄₈ → Λ⁴₂₇` in the reduced-echelon bases and in the
/// bases of projected blades.
pub fn spin7_p2_matrix(t: &Spin7Tables) -> Result<P2Matrix> {
    let dom = t.component(3, 48);
    let cod = t.component(4, 27);
    let blade_adapted = export("reduced_echelon", dom.basis(), cod.basis(), None, cod)?;
    let (db, dv) = projected_blade_basis(dom);
    let (cb, cv) = projected_blade_basis(cod);
    let projected_blade = export("projected_blade", &dv, &cv, Some((db, cb)), cod)?;
    Ok(P2Matrix {
        map: "p₂∘ω¹: Λ^3_48 → Λ^4_27".into(),
        blade_adapted,
        projected_blade,
    })
}

/// Constants of the four type II complexes at `λ = ω¹`.
pub fn spin7_constant_items(t: &Spin7Tables) -> Result<Vec<CheckItem>> {
    let w1 = omega1();
    let half = frac(1, 2);
    let l3_8 = t.component(3, 8);
    let omega_line = t.component(4, 1);
    let p5_space = t.sum(4, &[1, 7]);
    let l5_8 = t.component(5, 8);
    let mut items = Vec::new();
    for i in 1..=7 {
        items.push(form_item(
            &format!("spin7.const.p3_{i}"),
            &format!("p₃(ω¹α_{i}) = −3/7 *(Ωω^{})", i + 1),
            &proj(l3_8, &w1.wedge(&t.alpha[i - 1])?)?,
            &t.star_omega_k[i].scale(&frac(-3, 7)),
        ));
    }
    items.push(form_item(
        "spin7.const.p4",
        "p₄(ω¹*(Ωω¹)) = 1/2 Ω",
        &proj(omega_line, &w1.wedge(&t.star_omega_k[0])?)?,
        &t.omega.scale(&half),
    ));
    for i in 1..=7 {
        items.push(form_item(
            &format!("spin7.const.p5_{i}"),
            &format!("p₅(ω¹*(Ωω^{})) = 1/2 β_{i}", i + 1),
            &proj(&p5_space, &w1.wedge(&t.star_omega_k[i])?)?,
            &t.beta[i - 1].scale(&half),
        ));
    }
    for i in 1..=7 {
        items.push(form_item(
            &format!("spin7.const.p6_{i}"),
            &format!("p₆(ω¹β_{i}) = 4/7 Ωω^{}", i + 1),
            &proj(l5_8, &w1.wedge(&t.beta[i - 1])?)?,
            &t.omega_k[i].scale(&frac(4, 7)),
        ));
    }
    // the printed index pairs β_{i+1} with ω^{i+1}
    let literal: Vec<bool> = (1..=6)
        .map(|i| {
            Ok(proj(l5_8, &w1.wedge(&t.beta[i])?)? == t.omega_k[i].scale(&frac(4, 7)))
        })
        .collect::<Result<_>>()?;
    items.push(CheckItem::informational(
        "spin7.const.p6_printed_index",
        "p₆(ω¹β_{i+1}) = 4/7 Ωω^{i+1} with the index as printed",
        literal.iter().all(|b| *b),
        json!({ "per_index_1_to_6": literal }),
    ));
    // p₇∘ω¹ on Λ²₂₁ is injective iff ω¹Λ²₂₁ meets Λ³₈ trivially
    let image = t.component(2, 21).wedge_covector(&w1)?;
    let meet = image.intersect(l3_8)?;
    let p7 = Projector::new(t.component(3, 48));
    let p7_images: Vec<SparseVec> = t
        .component(2, 21)
        .basis_forms()
        .iter()
        .map(|a| Ok(p7.project(&w1.wedge(a)?)?.to_sparse()))
        .collect::<Result<_>>()?;
    let p7_rank = Subspace::from_vectors(N, 3, &p7_images).dim();
    items.push(CheckItem::new(
        "spin7.p7.injective",
        "(ω¹Λ²₂₁) ∩ Λ³₈ = 0, so p₇∘ω¹ is injective on Λ²₂₁",
        meet.is_zero() && p7_rank == 21,
        json!({ "intersection_dim": meet.dim(), "rank": p7_rank }),
    ));
    Ok(items)
}

/// Full Spin(7) suite. Returns the report and the `p₂` matrix artifact.
pub fn spin7_suite(samples: usize, seed: u64) -> Result<(SuiteReport, P2Matrix)> {
    let t = spin7_build_tables()?;
    let mut report = SuiteReport::new("spin7", seed, samples);
    report.extend(spin7_table_items(&t)?);
    report.extend(spin7_verify_relations(&t)?);
    let (classified, items) = spin7_classify_prime_subspaces(&t)?;
    report.extend(items);

    let type1: [(&str, &str, Subspace, &[usize]); 6] = [
        (
            "spin7.complex.type1_minus",
            "0→Λ⁰→Λ¹→Λ²→Λ³→Λ⁴/Λ⁻ ≅ Λ⁺→0 is exact",
            t.lambda_minus().clone(),
            &[1, 8, 28, 56, 35],
        ),
        (
            "spin7.complex.type1_plus",
            "0→Λ⁰→Λ¹→Λ²→Λ³→Λ⁴/Λ⁺ ≅ Λ⁻→0 is exact",
            t.lambda_plus(),
            &[1, 8, 28, 56, 35],
        ),
        (
            "spin7.complex.type1_3_8",
            "0→Λ⁰→Λ¹→Λ²→Λ³/Λ³₈ ≅ Λ³₄₈→Λ⁴/(Λ³₈Λ¹) ≅ Λ⁴₂₇→0 is exact",
            t.component(3, 8).clone(),
            &[1, 8, 28, 48, 27],
        ),
        (
            "spin7.complex.type1_4_27",
            "0→Λ⁰→⋯→Λ³→Λ⁴/Λ⁴₂₇ ≅ ⟨Ω⟩⊕Λ⁴₇⊕Λ⁻→Λ⁵/Λ⁵₄₈ ≅ Λ⁵₈→0 is exact",
            t.component(4, 27).clone(),
            &[1, 8, 28, 56, 43, 8],
        ),
        (
            "spin7.complex.type1_6_7",
            "0→Λ⁰→⋯→Λ⁵→Λ⁶/Λ⁶₇ ≅ Λ⁶₂₁→0 is exact",
            t.component(6, 7).clone(),
            &[1, 8, 28, 56, 70, 56, 21],
        ),
        (
            "spin7.complex.type1_adjoint",
            "the type I complex generated by Λ²₂₁ is exact",
            t.component(2, 21).clone(),
            &[1, 8, 7],
        ),
    ];
    for (i, (id, claim, e, dims)) in type1.iter().enumerate() {
        report.push(protocol_item(
            id,
            claim,
            &SymbolComplex::type1(e)?,
            N,
            Some(dims),
            samples,
            seed.wrapping_add(i as u64),
        )?);
    }
    report.extend(spin7_p1_items(&t)?);
    let p2 = spin7_p2_matrix(&t)?;
    report.push(CheckItem::new(
        "spin7.p2.rank",
        "the matrix of p₂∘ω¹: Λ³₄₈ → Λ⁴₂₇ has full rank 27 in both bases",
        p2.blade_adapted.rank == 27 && p2.projected_blade.rank == 27,
        json!({
            "rows": p2.blade_adapted.rows,
            "cols": p2.blade_adapted.cols,
            "rank_reduced_echelon": p2.blade_adapted.rank,
            "rank_projected_blade": p2.projected_blade.rank,
        }),
    ));

    let type2: [(&str, &str, Subspace, Subspace, &[usize]); 4] = [
        (
            "spin7.complex.type2_2_7",
            "0→Λ²₇→Λ³₈→⟨Ω⟩→0, the pair (Λ²₇, Λ³₄₈), is exact",
            t.component(2, 7).clone(),
            t.component(3, 48).clone(),
            &[7, 8, 1],
        ),
        (
            "spin7.complex.type2_3_8",
            "0→Λ³₈→⟨Ω⟩⊕Λ⁴₇→0, the pair (Λ³₈, Λ⁴₂₇⊕Λ⁻), is exact",
            t.component(3, 8).clone(),
            t.sum(4, &[27, 35]),
            &[8, 8],
        ),
        (
            "spin7.complex.type2_4_8",
            "0→⟨Ω⟩⊕Λ⁴₇→Λ⁵₈→0, the pair (Λ⁴₁⊕Λ⁴₇, Λ⁵₄₈), is exact",
            t.sum(4, &[1, 7]),
            t.component(5, 48).clone(),
            &[8, 8],
        ),
        (
            "spin7.complex.type2_2_21",
            "0→Λ²₂₁→Λ³₄₈→Λ⁴₂₇→0, the pair (Λ²₂₁, Λ³₈), is exact",
            t.component(2, 21).clone(),
            t.component(3, 8).clone(),
            &[21, 48, 27],
        ),
    ];
    for (i, (id, claim, f, e, dims)) in type2.iter().enumerate() {
        report.push(protocol_item(
            id,
            claim,
            &SymbolComplex::type2(f, e)?,
            N,
            Some(dims),
            samples,
            seed.wrapping_add(10 + i as u64),
        )?);
    }
    report.extend(spin7_constant_items(&t)?);

    let scan1 = type1_scan(&t.decomposition, 2..=N - 1)?;
    let scan2 = type2_scan(&t.decomposition, &classified)?;
    report.extend(exhaustiveness_items(
        "spin7",
        &scan1,
        &scan2,
        &[name(2, 21), name(3, 8), plus_name(), name(4, 35), name(4, 27), name(6, 7)],
        &[
            (name(2, 7), name(3, 48)),
            (name(2, 21), name(3, 8)),
            (name(3, 8), format!("{}⊕{}", name(4, 27), name(4, 35))),
            (format!("{}⊕{}", name(4, 1), name(4, 7)), name(5, 48)),
        ],
    ));
    Ok((report, p2))
}
