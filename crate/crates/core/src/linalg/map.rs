use std::fmt;

use super::matrix::QMatrix;
use super::rational::{sparse_from_dense, sub_scaled, Rational, SparseVec};
use super::subspace::{check_form, wedge_covector_vec, Projector, Subspace};
use crate::error::{Error, Result};
use crate::exterior::{binomial, Blade, Form};

/// `Λᵏ/E`, realised on the orthogonal complement `E^⊥`.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    divisor: Subspace,
    complement: Subspace,
    projector: Projector,
}

impl QuotientSpace {
    pub fn new(divisor: Subspace) -> Self {
        let complement = divisor.complement();
        let projector = complement.projector();
        QuotientSpace {
            divisor,
            complement,
            projector,
        }
    }

    pub fn divisor(&self) -> &Subspace {
        &self.divisor
    }

    /// The representing subspace `E^⊥`.
    pub fn complement(&self) -> &Subspace {
        &self.complement
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    /// Orthogonal projection of a representative onto `E^⊥`.
    pub fn project_vec(&self, v: &SparseVec) -> SparseVec {
        self.projector.project_vec(v)
    }
}

/// Domain or codomain of a [`LinearMap`].
#[derive(Clone, Debug)]
pub enum SpaceDescriptor {
    Full { n: usize, k: usize },
    Sub(Subspace),
    Quotient(QuotientSpace),
}

impl SpaceDescriptor {
    pub fn full(n: usize, k: usize) -> Self {
        SpaceDescriptor::Full { n, k }
    }

    pub fn ambient(&self) -> usize {
        match self {
            SpaceDescriptor::Full { n, .. } => *n,
            SpaceDescriptor::Sub(s) => s.ambient(),
            SpaceDescriptor::Quotient(q) => q.divisor.ambient(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            SpaceDescriptor::Full { k, .. } => *k,
            SpaceDescriptor::Sub(s) => s.degree(),
            SpaceDescriptor::Quotient(q) => q.divisor.degree(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SpaceDescriptor::Full { n, k } => binomial(*n, *k),
            SpaceDescriptor::Sub(s) => s.dim(),
            SpaceDescriptor::Quotient(q) => q.dim(),
        }
    }

    /// Representatives of the basis in ambient blade coordinates.
    pub fn basis_vectors(&self) -> Vec<SparseVec> {
        match self {
            SpaceDescriptor::Full { n, k } => Subspace::full(*n, *k).basis().to_vec(),
            SpaceDescriptor::Sub(s) => s.basis().to_vec(),
            SpaceDescriptor::Quotient(q) => q.complement.basis().to_vec(),
        }
    }

    /// Coordinates of an ambient vector (or of its class, for quotients).
    pub fn coordinates_of(&self, v: &SparseVec) -> Result<Vec<Rational>> {
        match self {
            SpaceDescriptor::Full { n, k } => {
                Ok(super::rational::dense_from_sparse(v, binomial(*n, *k)))
            }
            SpaceDescriptor::Sub(s) => s.coordinates(v).ok_or_else(|| {
                Error::Consistency("vector does not lie in the codomain subspace".into())
            }),
            SpaceDescriptor::Quotient(q) => Ok(q
                .complement
                .coordinates(&q.project_vec(v))
                .expect("projection lies in the complement")),
        }
    }

    /// Divisor whose image must vanish for maps out of or into this space.
    pub fn divisor(&self) -> Option<&Subspace> {
        match self {
            SpaceDescriptor::Quotient(q) => Some(&q.divisor),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            SpaceDescriptor::Full { k, .. } => format!("Λ^{k}"),
            SpaceDescriptor::Sub(s) => format!("E ⊂ Λ^{} (dim {})", s.degree(), s.dim()),
            SpaceDescriptor::Quotient(q) => format!(
                "Λ^{}/E (divisor dim {})",
                q.divisor.degree(),
                q.divisor.dim()
            ),
        }
    }
}

/// An exact matrix between coordinate bases; column `j` is the image of the
/// `j`-th domain basis vector.
#[derive(Clone, Debug)]
pub struct LinearMap {
    domain: SpaceDescriptor,
    codomain: SpaceDescriptor,
    matrix: QMatrix,
}

impl LinearMap {
    pub fn new(domain: SpaceDescriptor, codomain: SpaceDescriptor, matrix: QMatrix) -> Result<Self> {
        if matrix.ncols() != domain.dim() || matrix.nrows() != codomain.dim() {
            return Err(Error::InvalidArgument(format!(
                "matrix is {}x{} but the spaces have dimensions {} -> {}",
                matrix.nrows(),
                matrix.ncols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn domain(&self) -> &SpaceDescriptor {
        &self.domain
    }

    pub fn codomain(&self) -> &SpaceDescriptor {
        &self.codomain
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn nullity(&self) -> usize {
        self.domain.dim() - self.rank()
    }

    /// Kernel as ambient representatives of domain elements.
    pub fn kernel_vectors(&self) -> Vec<SparseVec> {
        let basis = self.domain.basis_vectors();
        self.matrix
            .kernel()
            .iter()
            .map(|coords| combine(&basis, coords))
            .collect()
    }

    /// Image as ambient representatives of codomain elements.
    pub fn image_vectors(&self) -> Vec<SparseVec> {
        let basis = self.codomain.basis_vectors();
        (0..self.matrix.ncols())
            .map(|j| combine(&basis, &self.matrix.sparse_column(j)))
            .filter(|v| !v.is_empty())
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.matrix.is_square()
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} ({}x{}, rank {})",
            self.domain.label(),
            self.codomain.label(),
            self.matrix.nrows(),
            self.matrix.ncols(),
            self.rank()
        )
    }
}

fn combine(basis: &[SparseVec], coords: &SparseVec) -> SparseVec {
    let mut acc: SparseVec = Vec::new();
    for (i, c) in coords {
        acc = sub_scaled(&acc, &-c.clone(), &basis[*i]);
    }
    acc
}

/// Matrix of `[x] ↦ [λ ∧ x]` between two spaces of consecutive degree.
///
/// Quotients are handled on their orthogonal-complement representatives, so
/// the map is `p_target ∘ (λ∧·) ∘ incl_source`. Fails with
/// [`Error::IllDefinedQuotientMap`] when `λ ∧ (source divisor)` is not inside
/// the target divisor, or when an image leaves a subspace target.
pub fn induced_quotient_map(
    lambda: &Form,
    source: &SpaceDescriptor,
    target: &SpaceDescriptor,
) -> Result<LinearMap> {
    let n = source.ambient();
    check_form(n, 1, lambda)?;
    if target.ambient() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: target.ambient(),
        });
    }
    if target.degree() != source.degree() + 1 {
        return Err(Error::DegreeMismatch {
            expected: source.degree() + 1,
            found: target.degree(),
        });
    }
    let blades = Blade::all(n, source.degree());
    if let Some(div) = source.divisor() {
        let target_div = target.divisor();
        for e in div.basis() {
            let img = wedge_covector_vec(lambda, &blades, e);
            let inside = match target_div {
                Some(t) => t.contains_vec(&img),
                None => img.is_empty(),
            };
            if !inside {
                return Err(Error::IllDefinedQuotientMap);
            }
        }
    }
    let basis = source.basis_vectors();
    let mut columns = Vec::with_capacity(basis.len());
    for b in &basis {
        let img = wedge_covector_vec(lambda, &blades, b);
        let coords = target
            .coordinates_of(&img)
            .map_err(|_| Error::IllDefinedQuotientMap)?;
        columns.push(sparse_from_dense(&coords));
    }
    let matrix = QMatrix::from_sparse_columns(target.dim(), &columns);
    LinearMap::new(source.clone(), target.clone(), matrix)
}

/// True if every entry of the matrix is zero.
pub fn is_zero_map(m: &LinearMap) -> bool {
    m.matrix().is_zero() || m.matrix().nrows() == 0 || m.matrix().ncols() == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_map_when_divisors_are_zero() {
        let lambda = Form::covector(4, 1).unwrap();
        let m = induced_quotient_map(
            &lambda,
            &SpaceDescriptor::Quotient(QuotientSpace::new(Subspace::zero(4, 1))),
            &SpaceDescriptor::Quotient(QuotientSpace::new(Subspace::zero(4, 2))),
        )
        .unwrap();
        assert_eq!(m.rank(), 3);
        let plain = induced_quotient_map(
            &lambda,
            &SpaceDescriptor::full(4, 1),
            &SpaceDescriptor::full(4, 2),
        )
        .unwrap();
        assert_eq!(m.matrix(), plain.matrix());
    }

    #[test]
    fn zero_lambda_gives_zero_map() {
        let m = induced_quotient_map(
            &Form::zero(4, 1),
            &SpaceDescriptor::full(4, 2),
            &SpaceDescriptor::full(4, 3),
        )
        .unwrap();
        assert!(is_zero_map(&m));
    }

    #[test]
    fn ill_defined_is_rejected() {
        let lambda = Form::covector(4, 1).unwrap();
        let e = Subspace::span_one(&Form::covector(4, 2).unwrap());
        let r = induced_quotient_map(
            &lambda,
            &SpaceDescriptor::Quotient(QuotientSpace::new(e)),
            &SpaceDescriptor::full(4, 2),
        );
        assert!(matches!(r, Err(Error::IllDefinedQuotientMap)));
    }
}
