//! Symbol complexes of a covector `λ` acting by `λ∧·` on chains of
//! subspaces and quotients of `Λ*(ℝⁿ)`.
//!
//! Map ranks are first bounded below modulo a large prime. Because every
//! complex built here satisfies `rank(in) + rank(out) ≤ dim` at each stage,
//! a stage whose modular bounds already add up to its dimension is exact,
//! and both adjacent ranks are then known exactly. Remaining ranks are
//! computed over ℚ.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{binomial, Blade, Form};
use crate::linalg::modp::{self, ModpEchelon};
use crate::linalg::rational::SparseVec;
use crate::linalg::subspace::{check_covector, span_rref, wedge_covector_vec};
use crate::linalg::Subspace;

#[derive(Clone, Debug)]
pub enum StageSpace {
    Full,
    /// `Λʲ/D`, realised on `D^⊥`.
    Quotient(Subspace),
    Sub(Subspace),
}

#[derive(Clone, Debug)]
pub struct Stage {
    pub label: String,
    pub degree: usize,
    pub space: StageSpace,
}

impl Stage {
    pub fn dim(&self, n: usize) -> usize {
        match &self.space {
            StageSpace::Full => binomial(n, self.degree),
            StageSpace::Quotient(d) => binomial(n, self.degree) - d.dim(),
            StageSpace::Sub(s) => s.dim(),
        }
    }

    fn divisor(&self) -> Option<&Subspace> {
        match &self.space {
            StageSpace::Quotient(d) => Some(d),
            _ => None,
        }
    }

    /// Vectors whose images span the image of `λ∧·` out of this stage.
    fn generators(&self, n: usize) -> Vec<SparseVec> {
        match &self.space {
            StageSpace::Sub(s) => s.basis().to_vec(),
            _ => Subspace::full(n, self.degree).basis().to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexKind {
    Type1,
    Type2,
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankSource {
    /// Modular lower bound that the complex property forces to be exact.
    ModularCertified,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageReport {
    pub label: String,
    pub degree: usize,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolComplexReport {
    pub kind: ComplexKind,
    pub lambda: Form,
    pub stages: Vec<StageReport>,
    pub map_ranks: Vec<usize>,
    pub rank_sources: Vec<RankSource>,
    pub exact_at: Vec<bool>,
    pub euler_characteristic: i64,
    pub verdict: bool,
}

impl SymbolComplexReport {
    pub fn failing_positions(&self) -> Vec<usize> {
        self.exact_at
            .iter()
            .enumerate()
            .filter(|(_, e)| !**e)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.dim).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.stages.iter().map(|s| s.label.clone()).collect()
    }
}

/// `E, E·Λ¹, E·Λ², …` up to (excluding) the first full member, stopping at
/// degree `n`. Empty when `E` is already full.
pub fn product_chain(e: &Subspace) -> Result<Vec<Subspace>> {
    let mut chain = Vec::new();
    let mut cur = e.clone();
    while !cur.is_full() {
        let last = cur.degree() == cur.ambient();
        chain.push(cur.clone());
        if last {
            break;
        }
        cur = cur.product_space(1)?;
    }
    Ok(chain)
}

fn quotient_label(degree: usize, i: usize) -> String {
    if i == 0 {
        format!("Λ^{degree}/E")
    } else {
        format!("Λ^{degree}/E_{i}")
    }
}

/// A symbol complex with its stages fixed, ready to be evaluated at any
/// covector. Building the product chain dominates the cost, so reuse this
/// when sweeping over many `λ`.
#[derive(Clone, Debug)]
pub struct SymbolComplex {
    kind: ComplexKind,
    n: usize,
    stages: Vec<Stage>,
}

impl SymbolComplex {
    /// `0 → Λ⁰ → ⋯ → Λᵏ⁻¹ → Λᵏ/E → Λᵏ⁺¹/E₁ → ⋯ → Λᵏ⁺ʳ/E_r → 0`.
    pub fn type1(e: &Subspace) -> Result<Self> {
        let mut stages: Vec<Stage> = (0..e.degree())
            .map(|j| Stage {
                label: format!("Λ^{j}"),
                degree: j,
                space: StageSpace::Full,
            })
            .collect();
        for (i, ei) in product_chain(e)?.into_iter().enumerate() {
            stages.push(Stage {
                label: quotient_label(ei.degree(), i),
                degree: ei.degree(),
                space: StageSpace::Quotient(ei),
            });
        }
        Ok(SymbolComplex {
            kind: ComplexKind::Type1,
            n: e.ambient(),
            stages,
        })
    }

    /// `0 → F → Λᵏ/E → Λᵏ⁺¹/E₁ → ⋯ → Λᵏ⁺ʳ/E_r → 0` with `F ⊂ Λᵏ⁻¹`.
    pub fn type2(f: &Subspace, e: &Subspace) -> Result<Self> {
        let n = e.ambient();
        if f.ambient() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: f.ambient(),
            });
        }
        if f.degree() + 1 != e.degree() {
            return Err(Error::DegreeMismatch {
                expected: e.degree().saturating_sub(1),
                found: f.degree(),
            });
        }
        let mut stages = vec![Stage {
            label: "F".into(),
            degree: f.degree(),
            space: StageSpace::Sub(f.clone()),
        }];
        for (i, ei) in product_chain(e)?.into_iter().enumerate() {
            stages.push(Stage {
                label: quotient_label(ei.degree(), i),
                degree: ei.degree(),
                space: StageSpace::Quotient(ei),
            });
        }
        Ok(SymbolComplex {
            kind: ComplexKind::Type2,
            n,
            stages,
        })
    }

    /// `0 → E → E₁ → ⋯ → E_r → Λᵏ⁺ʳ⁺¹ → ⋯ → Λⁿ → 0`.
    pub fn dual(e: &Subspace) -> Result<Self> {
        let n = e.ambient();
        let mut chain = product_chain(e)?;
        if chain.is_empty() {
            chain.push(e.clone());
        }
        let last = chain.last().expect("nonempty").degree();
        let mut stages: Vec<Stage> = chain
            .into_iter()
            .enumerate()
            .map(|(i, ei)| Stage {
                label: if i == 0 { "E".into() } else { format!("E_{i}") },
                degree: ei.degree(),
                space: StageSpace::Sub(ei),
            })
            .collect();
        for j in (last + 1)..=n {
            stages.push(Stage {
                label: format!("Λ^{j}"),
                degree: j,
                space: StageSpace::Full,
            });
        }
        Ok(SymbolComplex {
            kind: ComplexKind::Dual,
            n,
            stages,
        })
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn dims(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.dim(self.n)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler(&self.dims())
    }

    pub fn at(&self, lambda: &Form) -> Result<SymbolComplexReport> {
        check_covector(self.n, lambda)?;
        evaluate(self.kind, self.n, &self.stages, lambda)
    }
}

pub fn build_type1_symbol_complex(e: &Subspace, lambda: &Form) -> Result<SymbolComplexReport> {
    check_covector(e.ambient(), lambda)?;
    SymbolComplex::type1(e)?.at(lambda)
}

pub fn build_type2_symbol_complex(
    f: &Subspace,
    e: &Subspace,
    lambda: &Form,
) -> Result<SymbolComplexReport> {
    check_covector(e.ambient(), lambda)?;
    SymbolComplex::type2(f, e)?.at(lambda)
}

pub fn build_dual_symbol_complex(e: &Subspace, lambda: &Form) -> Result<SymbolComplexReport> {
    check_covector(e.ambient(), lambda)?;
    SymbolComplex::dual(e)?.at(lambda)
}

fn euler(dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

struct MapData {
    target_cols: usize,
    divisor: Vec<SparseVec>,
    source_blades: Vec<Blade>,
    generators: Vec<SparseVec>,
}

fn map_data(n: usize, src: &Stage, tgt: &Stage) -> MapData {
    MapData {
        target_cols: binomial(n, tgt.degree),
        divisor: tgt.divisor().map(|d| d.basis().to_vec()).unwrap_or_default(),
        source_blades: Blade::all(n, src.degree),
        generators: src.generators(n),
    }
}

/// Lower bound for the map rank modulo p, or `None` if some entry is not
/// p-integral.
fn modular_rank(n: usize, lambda_p: &[u64], data: &MapData) -> Option<usize> {
    let mut ech = ModpEchelon::new(data.target_cols);
    for d in &data.divisor {
        ech.insert_sparse(d)?;
    }
    let base = ech.rank();
    for g in &data.generators {
        if ech.is_full() {
            break;
        }
        let mut row = vec![0u64; data.target_cols];
        for (idx, x) in g {
            let x = modp::reduce(x)?;
            let b = data.source_blades[*idx];
            for (i, &l) in lambda_p.iter().enumerate() {
                if l == 0 || b.contains(i + 1) {
                    continue;
                }
                let e = Blade::from_mask(n, 1 << i);
                let t = Blade::from_mask(n, b.mask() | 1 << i).colex_index();
                let v = modp::mul(l, x);
                row[t] = if e.wedge_sign(&b) > 0 {
                    modp::add(row[t], v)
                } else {
                    modp::sub(row[t], v)
                };
            }
        }
        ech.insert(row);
    }
    Some(ech.rank() - base)
}

fn exact_rank(lambda: &Form, data: &MapData) -> usize {
    let mut rows = data.divisor.clone();
    for g in &data.generators {
        let v = wedge_covector_vec(lambda, &data.source_blades, g);
        if !v.is_empty() {
            rows.push(v);
        }
    }
    span_rref(data.target_cols, &rows).len() - data.divisor.len()
}

fn evaluate(
    kind: ComplexKind,
    n: usize,
    stages: &[Stage],
    lambda: &Form,
) -> Result<SymbolComplexReport> {
    for w in stages.windows(2) {
        if w[1].degree != w[0].degree + 1 {
            return Err(Error::Consistency("stage degrees are not consecutive".into()));
        }
    }
    let dims: Vec<usize> = stages.iter().map(|s| s.dim(n)).collect();
    let maps: Vec<MapData> = stages
        .windows(2)
        .map(|w| map_data(n, &w[0], &w[1]))
        .collect();
    let lambda_p: Option<Vec<u64>> = (1..=n)
        .map(|i| modp::reduce(&lambda.coefficient(&Blade::from_mask(n, 1 << (i - 1)))))
        .collect();
    let lower: Vec<Option<usize>> = match &lambda_p {
        Some(lp) => maps.iter().map(|m| modular_rank(n, lp, m)).collect(),
        None => vec![None; maps.len()],
    };
    let in_of = |ranks: &[Option<usize>], p: usize| if p == 0 { Some(0) } else { ranks[p - 1] };
    let out_of = |ranks: &[Option<usize>], p: usize| if p == maps.len() { Some(0) } else { ranks[p] };
    let mut certified = vec![false; maps.len()];
    for (p, &dim) in dims.iter().enumerate() {
        if let (Some(a), Some(b)) = (in_of(&lower, p), out_of(&lower, p)) {
            if a + b == dim {
                if p > 0 {
                    certified[p - 1] = true;
                }
                if p < maps.len() {
                    certified[p] = true;
                }
            }
        }
    }
    let mut ranks = Vec::with_capacity(maps.len());
    let mut sources = Vec::with_capacity(maps.len());
    for (m, data) in maps.iter().enumerate() {
        if certified[m] {
            ranks.push(lower[m].expect("certified"));
            sources.push(RankSource::ModularCertified);
        } else {
            ranks.push(exact_rank(lambda, data));
            sources.push(RankSource::Exact);
        }
    }
    let mut reports = Vec::with_capacity(stages.len());
    let mut exact_at = Vec::with_capacity(stages.len());
    for (p, stage) in stages.iter().enumerate() {
        let rin = if p == 0 { 0 } else { ranks[p - 1] };
        let rout = if p == maps.len() { 0 } else { ranks[p] };
        if rin + rout > dims[p] {
            return Err(Error::Consistency(format!(
                "λ∧λ ≠ 0 at stage {p}: ranks {rin} + {rout} exceed dimension {}",
                dims[p]
            )));
        }
        let exact = rin + rout == dims[p];
        exact_at.push(exact);
        reports.push(StageReport {
            label: stage.label.clone(),
            degree: stage.degree,
            dim: dims[p],
            rank_in: rin,
            rank_out: rout,
            exact,
        });
    }
    let euler = euler(&dims);
    Ok(SymbolComplexReport {
        kind,
        lambda: lambda.clone(),
        verdict: exact_at.iter().all(|e| *e),
        stages: reports,
        map_ranks: ranks,
        rank_sources: sources,
        exact_at,
        euler_characteristic: euler,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn asd() -> Subspace {
        let forms = [
            Form::from_words(4, &[(1, "12"), (-1, "34")]).unwrap(),
            Form::from_words(4, &[(1, "13"), (1, "24")]).unwrap(),
            Form::from_words(4, &[(1, "14"), (-1, "23")]).unwrap(),
        ];
        Subspace::span(4, 2, &forms).unwrap()
    }

    #[test]
    fn koszul_is_exact() {
        let l = Form::from_covector_coords(&[int(1), int(-2), int(0), int(3), int(5)]);
        let r = build_type1_symbol_complex(&Subspace::zero(5, 2), &l).unwrap();
        assert!(r.verdict, "{r:?}");
        assert_eq!(r.stages.len(), 6);
        assert_eq!(r.euler_characteristic, 0);
    }

    #[test]
    fn anti_self_dual_r4() {
        let l = Form::covector(4, 1).unwrap();
        let r = build_type1_symbol_complex(&asd(), &l).unwrap();
        assert!(r.verdict);
        assert_eq!(r.dims(), vec![1, 4, 3]);
        let d = build_dual_symbol_complex(&asd(), &l).unwrap();
        assert!(d.verdict);
    }

    #[test]
    fn decomposable_line_fails() {
        let e = Subspace::span_one(&Form::from_words(4, &[(1, "12")]).unwrap());
        let l = Form::covector(4, 1).unwrap();
        let r = build_type1_symbol_complex(&e, &l).unwrap();
        assert!(!r.verdict);
        assert!(!r.failing_positions().is_empty());
    }

    #[test]
    fn rejects_zero_lambda_and_bad_degrees() {
        assert!(build_type1_symbol_complex(&asd(), &Form::zero(4, 1)).is_err());
        assert!(build_type2_symbol_complex(&asd(), &asd(), &Form::covector(4, 1).unwrap()).is_err());
    }
}
