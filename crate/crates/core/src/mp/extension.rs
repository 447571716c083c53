//! Extending a prime subspace `E ⊂ Λ²(ℝⁿ)` to `Λ²(ℝⁿ⁺¹)` by attaching
//! `λᵢ∧e + αᵢ`, where `e = ωⁿ⁺¹` is the new covector.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{binomial, Form};
use crate::linalg::rational::{int, Rational, SparseVec};
use crate::linalg::subspace::check_covector;
use crate::linalg::{QMatrix, Subspace};

fn check_two_forms(e: &Subspace) -> Result<()> {
    if e.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: e.degree(),
        });
    }
    Ok(())
}

/// `⟨λ₁..λ_s⟩∧Λ¹`.
fn lambda_products(n: usize, lambdas: &[Form]) -> Result<Subspace> {
    let full = Subspace::full(n, 1);
    let parts = lambdas
        .iter()
        .map(|l| full.wedge_covector(l))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Subspace> = parts.iter().collect();
    Subspace::sum_all(n, 2, &refs)
}

/// `L(λ) = E + λ∧Λ¹(ℝⁿ)`.
pub fn l_lambda(e: &Subspace, lambda: &Form) -> Result<Subspace> {
    check_two_forms(e)?;
    check_covector(e.ambient(), lambda)?;
    e.sum(&Subspace::full(e.ambient(), 1).wedge_covector(lambda)?)
}

/// Whether the sum `E + λ∧Λ¹` is direct.
pub fn l_lambda_is_direct(e: &Subspace, lambda: &Form) -> Result<bool> {
    Ok(l_lambda(e, lambda)?.dim() == e.dim() + e.ambient() - 1)
}

/// The obstruction space `E + ⟨λ₁..λ_s⟩∧Λ¹`.
pub fn obstruction_space(e: &Subspace, lambdas: &[Form]) -> Result<Subspace> {
    check_two_forms(e)?;
    for l in lambdas {
        check_covector(e.ambient(), l)?;
    }
    e.sum(&lambda_products(e.ambient(), lambdas)?)
}

fn independent(n: usize, forms: &[Form]) -> bool {
    forms.is_empty() || Subspace::span(n, forms[0].degree(), forms).map(|s| s.dim() == forms.len()).unwrap_or(false)
}

/// Solves `target = Σ cⱼ·columns[j]`, if possible.
fn solve_combination(len: usize, columns: &[SparseVec], target: &SparseVec) -> Option<Vec<Rational>> {
    let mut cols = columns.to_vec();
    cols.push(target.clone());
    let kernel = QMatrix::from_sparse_columns(len, &cols).kernel();
    let last = columns.len();
    let v = kernel.into_iter().find(|v| v.iter().any(|(i, x)| *i == last && !x.is_zero()))?;
    let pivot = v.iter().find(|(i, _)| *i == last).expect("found").1.clone();
    let mut out = vec![Rational::zero(); columns.len()];
    for (i, x) in v {
        if i < last {
            out[i] = -x / &pivot;
        }
    }
    Some(out)
}

/// Witness that `α ∈ L(λ)`: `α = β + λ∧μ` with `β ∈ E`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MembershipCertificate {
    pub beta: Form,
    pub mu: Form,
}

impl MembershipCertificate {
    pub fn verify(&self, e: &Subspace, lambda: &Form, alpha: &Form) -> bool {
        let rebuilt = lambda.wedge(&self.mu).and_then(|w| w.try_add(&self.beta));
        matches!(rebuilt, Ok(f) if &f == alpha) && e.contains(&self.beta).unwrap_or(false)
    }
}

/// Exact decomposition `α = β + λ∧μ`, or `None` when `α ∉ L(λ)`.
pub fn membership_certificate(e: &Subspace, lambda: &Form, alpha: &Form) -> Result<Option<MembershipCertificate>> {
    check_two_forms(e)?;
    check_covector(e.ambient(), lambda)?;
    let n = e.ambient();
    let mut cols: Vec<SparseVec> = e.basis().to_vec();
    let units: Vec<Form> = (1..=n).map(|i| Form::covector(n, i)).collect::<Result<_>>()?;
    for u in &units {
        cols.push(lambda.wedge(u)?.to_sparse());
    }
    let Some(c) = solve_combination(binomial(n, 2), &cols, &alpha.to_sparse()) else {
        return Ok(None);
    };
    let d = e.dim();
    let mut beta = Form::zero(n, 2);
    for (j, f) in e.basis_forms().iter().enumerate() {
        beta = beta.try_add(&f.scale(&c[j]))?;
    }
    let mu = Form::from_covector_coords(&c[d..]);
    Ok(Some(MembershipCertificate { beta, mu }))
}

/// One extension `E ↦ E ⊕ ⟨λᵢ∧e + αᵢ⟩` from `ℝⁿ` to `ℝⁿ⁺¹`. With no
/// covectors the step only enlarges the ambient space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtensionStep {
    pub n: usize,
    pub base_dim: usize,
    pub lambdas: Vec<Form>,
    pub alphas: Vec<Form>,
    /// `dim(E + ⟨λ⟩∧Λ¹)`.
    pub obstruction_dim: usize,
    pub result_dim: usize,
    /// `dim E + Σᵢ (n − i) < C(n, 2)`, the count under which extra room is
    /// guaranteed for a single attachment.
    pub count_condition: bool,
}

impl ExtensionStep {
    /// Re-checks the side condition exactly and builds the extended space.
    pub fn apply(&self, e: &Subspace) -> Result<Subspace> {
        let n = self.n;
        let fail = |why: String| Err(Error::Consistency(why));
        if e.ambient() != n || e.degree() != 2 || e.dim() != self.base_dim {
            return fail(format!(
                "step expects a {}-dimensional subspace of Λ²(ℝ^{n})",
                self.base_dim
            ));
        }
        if self.lambdas.len() != self.alphas.len() {
            return fail("one α is needed per λ".into());
        }
        for (l, a) in self.lambdas.iter().zip(&self.alphas) {
            if l.ambient() != n || l.degree() != 1 || l.is_zero() {
                return fail("λ must be a nonzero covector on ℝⁿ".into());
            }
            if a.ambient() != n || a.degree() != 2 {
                return fail("α must be a 2-form on ℝⁿ".into());
            }
        }
        if !independent(n, &self.lambdas) {
            return fail("the covectors are linearly dependent".into());
        }
        let w = obstruction_space(e, &self.lambdas)?;
        if w.dim() != self.obstruction_dim {
            return fail(format!(
                "obstruction space has dimension {}, recorded {}",
                w.dim(),
                self.obstruction_dim
            ));
        }
        let mut vs = w.basis().to_vec();
        vs.extend(self.alphas.iter().map(|a| a.to_sparse()));
        if Subspace::from_vectors(n, 2, &vs).dim() != w.dim() + self.alphas.len() {
            return fail("the α's are not independent modulo E + ⟨λ⟩∧Λ¹".into());
        }
        let count = e.dim() + (1..=self.lambdas.len()).map(|i| n - i).sum::<usize>();
        if (count < binomial(n, 2)) != self.count_condition {
            return fail("recorded count condition does not match".into());
        }
        let result = attach(e, &self.lambdas, &self.alphas)?;
        if result.dim() != self.result_dim || result.dim() != e.dim() + self.lambdas.len() {
            return fail(format!(
                "extended space has dimension {}, recorded {}",
                result.dim(),
                self.result_dim
            ));
        }
        Ok(result)
    }
}

/// `E ⊕ ⟨λᵢ∧e + αᵢ⟩ ⊂ Λ²(ℝⁿ⁺¹)`, without checking anything.
pub fn attach(e: &Subspace, lambdas: &[Form], alphas: &[Form]) -> Result<Subspace> {
    let n = e.ambient();
    let up = n + 1;
    let new = Form::covector(up, up)?;
    let mut forms: Vec<Form> = e
        .basis_forms()
        .iter()
        .map(|f| f.shift(0, up))
        .collect::<Result<_>>()?;
    for (l, a) in lambdas.iter().zip(alphas) {
        forms.push(l.shift(0, up)?.wedge(&new)?.try_add(&a.shift(0, up)?)?);
    }
    Subspace::span(up, 2, &forms)
}

fn make_step(e: &Subspace, lambdas: &[Form], alphas: &[Form], w_dim: usize) -> Result<ExtensionStep> {
    let n = e.ambient();
    let count = e.dim() + (1..=lambdas.len()).map(|i| n - i).sum::<usize>();
    let step = ExtensionStep {
        n,
        base_dim: e.dim(),
        lambdas: lambdas.to_vec(),
        alphas: alphas.to_vec(),
        obstruction_dim: w_dim,
        result_dim: e.dim() + lambdas.len(),
        count_condition: count < binomial(n, 2),
    };
    step.apply(e)?;
    Ok(step)
}

/// Single attachment, accepted iff `α ∉ L(λ)`; for prime `E` the result is
/// then prime.
pub fn extend_one(e: &Subspace, lambda: &Form, alpha: &Form) -> Result<Option<ExtensionStep>> {
    let l = l_lambda(e, lambda)?;
    if alpha.ambient() != e.ambient() || alpha.degree() != 2 {
        return Err(Error::InvalidArgument("α must be a 2-form on the same space".into()));
    }
    if l.contains(alpha)? {
        return Ok(None);
    }
    make_step(e, std::slice::from_ref(lambda), std::slice::from_ref(alpha), l.dim()).map(Some)
}

/// Attaches `λᵢ∧e + αᵢ` for independent `λ₁..λ_s`, one `αᵢ` each, accepted
/// when the `αᵢ` are independent modulo `E + ⟨λ₁..λ_s⟩∧Λ¹`. Every nonzero
/// combination `Σtᵢαᵢ` then avoids `L(Σtᵢλᵢ)`, which is what primeness of
/// the result needs.
pub fn extend_multi(e: &Subspace, lambdas: &[Form], alphas: &[Form]) -> Result<Option<ExtensionStep>> {
    let n = e.ambient();
    if lambdas.is_empty() || lambdas.len() != alphas.len() {
        return Err(Error::InvalidArgument("need one α per λ and at least one λ".into()));
    }
    for l in lambdas {
        check_covector(n, l)?;
    }
    if !independent(n, lambdas) {
        return Err(Error::DependentCovectors);
    }
    if alphas.iter().any(|a| a.ambient() != n || a.degree() != 2) {
        return Err(Error::InvalidArgument("α must be a 2-form on the same space".into()));
    }
    let w = obstruction_space(e, lambdas)?;
    let mut vs = w.basis().to_vec();
    vs.extend(alphas.iter().map(|a| a.to_sparse()));
    if Subspace::from_vectors(n, 2, &vs).dim() != w.dim() + alphas.len() {
        return Ok(None);
    }
    make_step(e, lambdas, alphas, w.dim()).map(Some)
}

/// Samples integer `t ≠ 0` and tests `Σtᵢαᵢ ∈ L(Σtᵢλᵢ)`, the exact condition
/// for primeness of the attachment. Returns a violating `t` if one is found;
/// finding none is evidence only.
pub fn multi_condition_violation(
    e: &Subspace,
    lambdas: &[Form],
    alphas: &[Form],
    samples: usize,
    seed: u64,
) -> Result<Option<Vec<i64>>> {
    let s = lambdas.len();
    let n = e.ambient();
    let mut trials: Vec<Vec<i64>> = Vec::new();
    for i in 0..s {
        for j in (i + 1)..s {
            let mut t = vec![0; s];
            t[i] = 1;
            t[j] = -1;
            trials.push(t);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while trials.len() < samples {
        let t: Vec<i64> = (0..s).map(|_| rng.gen_range(-3..=3)).collect();
        if t.iter().any(|x| *x != 0) {
            trials.push(t);
        }
    }
    for t in trials {
        let mut lambda = Form::zero(n, 1);
        let mut alpha = Form::zero(n, 2);
        for (i, &ti) in t.iter().enumerate() {
            lambda = lambda.try_add(&lambdas[i].scale(&int(ti)))?;
            alpha = alpha.try_add(&alphas[i].scale(&int(ti)))?;
        }
        if lambda.is_zero() || l_lambda(e, &lambda)?.contains(&alpha)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::Baseline;

    fn w(n: usize, word: &str) -> Form {
        Form::from_words(n, &[(1, word)]).unwrap()
    }

    #[test]
    fn l_lambda_dimensions() {
        let om1 = Form::covector(4, 1).unwrap();
        assert_eq!(l_lambda(&Subspace::zero(4, 2), &om1).unwrap().dim(), 3);
        let minus = Baseline::AntiSelfDualR4.space().unwrap();
        assert_eq!(l_lambda(&minus, &om1).unwrap().dim(), 6);
        assert!(l_lambda_is_direct(&minus, &om1).unwrap());
        assert!(matches!(l_lambda(&minus, &Form::zero(4, 1)), Err(Error::ZeroCovector)));
    }

    #[test]
    fn rejection_carries_certificate() {
        let minus = Baseline::AntiSelfDualR4.space().unwrap();
        let om1 = Form::covector(4, 1).unwrap();
        let alpha = w(4, "12").try_add(&w(4, "34")).unwrap();
        assert!(extend_one(&minus, &om1, &alpha).unwrap().is_none());
        let cert = membership_certificate(&minus, &om1, &alpha).unwrap().unwrap();
        assert!(cert.verify(&minus, &om1, &alpha));
    }

    #[test]
    fn single_extension_into_r5() {
        // Λ⁻(ℝ⁴) has no room; start from the 3-dimensional space in ℝ⁵
        let minus = Baseline::AntiSelfDualR4.space().unwrap();
        let e = attach(&minus, &[], &[]).unwrap();
        let om1 = Form::covector(5, 1).unwrap();
        let step = extend_one(&e, &om1, &w(5, "25")).unwrap().unwrap();
        assert_eq!(step.result_dim, 4);
        assert!(extend_one(&e, &om1, &w(5, "15")).unwrap().is_none());
    }

    #[test]
    fn shared_alpha_is_never_prime_for_two_covectors() {
        let minus = Baseline::AntiSelfDualR4.space().unwrap();
        let e = attach(&minus, &[], &[]).unwrap();
        let lambdas = [Form::covector(5, 1).unwrap(), Form::covector(5, 2).unwrap()];
        let alpha = w(5, "35");
        let shared = [alpha.clone(), alpha];
        assert_eq!(
            multi_condition_violation(&e, &lambdas, &shared, 10, 1).unwrap(),
            Some(vec![1, -1])
        );
        // the attached difference (λ₁ − λ₂)∧e is decomposable
        let v = attach(&e, &lambdas, &shared).unwrap();
        let diff = Form::covector(6, 1)
            .unwrap()
            .try_sub(&Form::covector(6, 2).unwrap())
            .unwrap()
            .wedge(&Form::covector(6, 6).unwrap())
            .unwrap();
        assert!(v.contains(&diff).unwrap());
        assert!(extend_multi(&e, &lambdas, &shared).unwrap().is_none());
    }

    #[test]
    fn multi_extension_with_separate_alphas() {
        let minus = Baseline::AntiSelfDualR4.space().unwrap();
        let e = attach(&minus, &[], &[]).unwrap();
        let lambdas = [Form::covector(5, 1).unwrap(), Form::covector(5, 2).unwrap()];
        let wsp = obstruction_space(&e, &lambdas).unwrap();
        // ω^{13}+ω^{24} and ω^{14}−ω^{23} lie in both E and ⟨ω¹, ω²⟩∧Λ¹
        assert_eq!(wsp.dim(), 3 + 7 - 2);
        let alphas = [w(5, "35"), w(5, "45")];
        assert!(extend_multi(&e, &lambdas, &[w(5, "34"), w(5, "35")]).unwrap().is_none());
        let step = extend_multi(&e, &lambdas, &alphas).unwrap().unwrap();
        assert_eq!(step.result_dim, 5);
        assert_eq!(multi_condition_violation(&e, &lambdas, &alphas, 200, 3).unwrap(), None);
        let v = step.apply(&e).unwrap();
        let numeric = crate::primeness::numeric_prime_certificate(&v, 4, 1e-6, 5).unwrap();
        assert!(!numeric.below_tolerance);
        assert!(matches!(
            extend_multi(&e, &[lambdas[0].clone(), lambdas[0].clone()], &alphas),
            Err(Error::DependentCovectors)
        ));
    }

    #[test]
    fn tampered_step_fails_apply() {
        let minus = Baseline::AntiSelfDualR4.space().unwrap();
        let e = attach(&minus, &[], &[]).unwrap();
        let om1 = Form::covector(5, 1).unwrap();
        let mut step = extend_one(&e, &om1, &w(5, "25")).unwrap().unwrap();
        assert!(step.apply(&e).is_ok());
        step.alphas[0] = w(5, "15");
        assert!(step.apply(&e).is_err());
    }
}
