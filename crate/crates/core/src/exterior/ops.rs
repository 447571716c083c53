use num_traits::Zero;

use super::blade::Blade;
use super::form::Form;
use crate::error::{Error, Result};
use crate::linalg::map::{LinearMap, SpaceDescriptor};
use crate::linalg::matrix::QMatrix;
use crate::linalg::rational::{Rational, SparseVec};
use crate::linalg::subspace::Subspace;

/// Matrix of `β ↦ α ∧ β` from `Λᵏ` to `Λ^{k + deg α}`.
pub fn mult_map(alpha: &Form, k: usize) -> Result<LinearMap> {
    let n = alpha.ambient();
    let target = k + alpha.degree();
    if target > n {
        return Err(Error::DegreeOverflow { degree: target, n });
    }
    let columns: Vec<SparseVec> = Blade::all(n, k)
        .into_iter()
        .map(|b| alpha.wedge(&Form::from_blade(b)).map(|f| f.to_sparse()))
        .collect::<Result<_>>()?;
    let matrix = QMatrix::from_sparse_columns(super::binomial(n, target), &columns);
    LinearMap::new(
        SpaceDescriptor::full(n, k),
        SpaceDescriptor::full(n, target),
        matrix,
    )
}

/// The skew matrix `A` with `A[i][j] = ` coefficient of `ω^{ij}` for `i < j`.
pub fn skew_matrix(alpha: &Form) -> Result<QMatrix> {
    if alpha.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: alpha.degree(),
        });
    }
    let n = alpha.ambient();
    let mut a = QMatrix::zeros(n, n);
    for (b, x) in alpha.terms() {
        let idx = b.indices();
        let (i, j) = (idx[0] - 1, idx[1] - 1);
        a.set(i, j, x.clone());
        a.set(j, i, -x.clone());
    }
    Ok(a)
}

/// Inverse of [`skew_matrix`]: `A ↦ Σ_{i<j} A[i][j] ω^{ij}`. Only the upper
/// triangle is read.
pub fn two_form_from_matrix(a: &QMatrix) -> Result<Form> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let n = a.nrows();
    let mut terms = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let x = a.get(i, j);
            if !x.is_zero() {
                terms.push((Blade::new(n, &[i + 1, j + 1])?, x.clone()));
            }
        }
    }
    Form::from_terms(n, 2, terms)
}

/// Half the rank of the associated skew matrix.
pub fn rank_two_form(alpha: &Form) -> Result<usize> {
    Ok(skew_matrix(alpha)?.rank() / 2)
}

/// Whether a 2-form has real rank at least 4, i.e. `η ∧ η ≠ 0`.
pub fn rank_at_least_four(eta: &Form) -> Result<bool> {
    if eta.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: eta.degree(),
        });
    }
    if eta.ambient() < 4 {
        return Ok(false);
    }
    Ok(!eta.wedge(eta)?.is_zero())
}

/// `T_α(β) = *(α ∧ β)` on `Λᵏ`, for `α` of degree `n − 2k`.
pub fn t_operator(alpha: &Form, k: usize) -> Result<LinearMap> {
    let n = alpha.ambient();
    if 2 * k > n || alpha.degree() != n - 2 * k {
        return Err(Error::DegreeMismatch {
            expected: n.saturating_sub(2 * k),
            found: alpha.degree(),
        });
    }
    let columns: Vec<SparseVec> = Blade::all(n, k)
        .into_iter()
        .map(|b| {
            alpha
                .wedge(&Form::from_blade(b))
                .map(|f| f.hodge_star().to_sparse())
        })
        .collect::<Result<_>>()?;
    let matrix = QMatrix::from_sparse_columns(super::binomial(n, k), &columns);
    LinearMap::new(SpaceDescriptor::full(n, k), SpaceDescriptor::full(n, k), matrix)
}

/// `ker(M − c·I)` as a subspace of the domain's ambient `Λᵏ`.
pub fn eigenspace(map: &LinearMap, value: &Rational) -> Result<Subspace> {
    let m = map.matrix();
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let dom = map.domain();
    let shifted = m.sub_scalar_identity(value)?;
    let shifted = LinearMap::new(dom.clone(), map.codomain().clone(), shifted)?;
    Ok(Subspace::from_vectors(
        dom.ambient(),
        dom.degree(),
        &shifted.kernel_vectors(),
    ))
}

pub fn trace(map: &LinearMap) -> Result<Rational> {
    map.matrix().trace()
}

/// Action of a skew matrix `A ∈ so(n)` on forms, extended as a derivation
/// from `A·ωⁱ = Σⱼ A[j][i] ωʲ`.
pub fn skew_derivation(a: &QMatrix, f: &Form) -> Result<Form> {
    let n = f.ambient();
    if a.nrows() != n || a.ncols() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: a.nrows(),
        });
    }
    let mut out = Form::zero(n, f.degree());
    for (b, x) in f.terms() {
        for (p, &i) in b.indices().iter().enumerate() {
            let image: Vec<Rational> = (0..n).map(|j| a.get(j, i - 1).clone()).collect();
            let image = Form::from_covector_coords(&image);
            let rest: Vec<usize> = b.indices().into_iter().filter(|&t| t != i).collect();
            let rest = Form::from_blade(Blade::new(n, &rest)?);
            let mut term = image.wedge(&rest)?.scale(x);
            if p % 2 == 1 {
                term = -&term;
            }
            out = out.try_add(&term)?;
        }
    }
    Ok(out)
}

/// `{A ∈ so(n) : A·f = 0}` as a subspace of `Λ²` under `A ↦ Σ_{i<j} A[i][j] ω^{ij}`.
pub fn stabilizer_algebra(f: &Form) -> Result<Subspace> {
    let n = f.ambient();
    let columns: Vec<SparseVec> = Blade::all(n, 2)
        .into_iter()
        .map(|b| {
            let idx = b.indices();
            let mut a = QMatrix::zeros(n, n);
            a.set(idx[0] - 1, idx[1] - 1, Rational::from_integer(1.into()));
            a.set(idx[1] - 1, idx[0] - 1, Rational::from_integer((-1).into()));
            skew_derivation(&a, f).map(|g| g.to_sparse())
        })
        .collect::<Result<_>>()?;
    let m = QMatrix::from_sparse_columns(super::binomial(n, f.degree()), &columns);
    Ok(Subspace::from_vectors(n, 2, &m.kernel()))
}
