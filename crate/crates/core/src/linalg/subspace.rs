use num_traits::{One, Zero};

use super::echelon::Echelon;
use super::matrix::QMatrix;
use super::modp::ModpEchelon;
use super::rational::{dot, get, sub_scaled, Rational, SparseVec};
use crate::error::{Error, Result};
use crate::exterior::{binomial, Blade, Form};

/// A linear subspace of `Λᵏ(ℝⁿ)`, stored as the reduced row-echelon form of
/// its basis in colex blade coordinates. Equal subspaces have equal bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    n: usize,
    k: usize,
    rows: Vec<SparseVec>,
}

/// RREF of the span of `vectors` in a space of `cols` coordinates.
///
/// A modular pass picks a maximal independent subset; only those vectors are
/// eliminated exactly, and the rest are checked against the exact complement
/// of their span. Falls back to plain exact elimination whenever the modular
/// shortcut cannot be confirmed.
pub fn span_rref(cols: usize, vectors: &[SparseVec]) -> Vec<SparseVec> {
    let mut modp = ModpEchelon::new(cols);
    let mut chosen = Vec::new();
    let mut usable = true;
    for (i, v) in vectors.iter().enumerate() {
        match modp.insert_sparse(v) {
            Some(true) => chosen.push(i),
            Some(false) => {}
            None => {
                usable = false;
                break;
            }
        }
        if modp.is_full() {
            break;
        }
    }
    if usable {
        if chosen.len() == cols {
            return full_rows(cols);
        }
        let mut e = Echelon::new(cols);
        for &i in &chosen {
            e.insert(&vectors[i]);
        }
        let perp = e.kernel_basis();
        let all_inside = vectors
            .iter()
            .all(|v| perp.iter().all(|w| dot(v, w).is_zero()));
        if all_inside {
            return e.into_rref();
        }
    }
    let mut e = Echelon::new(cols);
    for v in vectors {
        e.insert(v);
        if e.is_full() {
            break;
        }
    }
    e.into_rref()
}

fn full_rows(cols: usize) -> Vec<SparseVec> {
    (0..cols).map(|i| vec![(i, Rational::one())]).collect()
}

/// `ω^{mask} ∧ v` for a coordinate vector `v` of degree `j`, in degree
/// `j + |mask|` coordinates. `blades` lists the degree-`j` blades.
pub(crate) fn wedge_blade_left(n: usize, mask: u32, blades: &[Blade], v: &SparseVec) -> SparseVec {
    let left = Blade::from_mask(n, mask);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        let b = blades[*i];
        let s = left.wedge_sign(&b);
        if s == 0 {
            continue;
        }
        let idx = Blade::from_mask(n, mask | b.mask()).colex_index();
        out.push((idx, if s < 0 { -x.clone() } else { x.clone() }));
    }
    out.sort_by_key(|(i, _)| *i);
    out
}

/// `λ ∧ v` for a covector `λ` and a coordinate vector `v` of degree `j`.
pub(crate) fn wedge_covector_vec(lambda: &Form, blades: &[Blade], v: &SparseVec) -> SparseVec {
    let n = lambda.ambient();
    let mut acc: SparseVec = Vec::new();
    for (b, c) in lambda.terms() {
        let w = wedge_blade_left(n, b.mask(), blades, v);
        acc = sub_scaled(&acc, &-c.clone(), &w);
    }
    acc
}

impl Subspace {
    pub fn zero(n: usize, k: usize) -> Self {
        Subspace {
            n,
            k,
            rows: Vec::new(),
        }
    }

    pub fn full(n: usize, k: usize) -> Self {
        Subspace {
            n,
            k,
            rows: full_rows(binomial(n, k)),
        }
    }

    pub fn from_vectors(n: usize, k: usize, vectors: &[SparseVec]) -> Self {
        Subspace {
            n,
            k,
            rows: span_rref(binomial(n, k), vectors),
        }
    }

    /// Span of a list of forms of the given space; zero forms are ignored.
    pub fn span(n: usize, k: usize, forms: &[Form]) -> Result<Self> {
        for f in forms {
            check_form(n, k, f)?;
        }
        let vs: Vec<SparseVec> = forms.iter().map(|f| f.to_sparse()).collect();
        Ok(Subspace::from_vectors(n, k, &vs))
    }

    pub fn span_one(f: &Form) -> Self {
        Subspace::from_vectors(f.ambient(), f.degree(), &[f.to_sparse()])
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `C(n, k)`.
    pub fn ambient_dim(&self) -> usize {
        binomial(self.n, self.k)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn basis_forms(&self) -> Vec<Form> {
        self.rows
            .iter()
            .map(|r| Form::from_sparse(self.n, self.k, r))
            .collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn basis_matrix(&self) -> QMatrix {
        QMatrix::from_sparse_rows(self.ambient_dim(), &self.rows)
    }

    pub(crate) fn echelon(&self) -> Echelon {
        Echelon::from_rref(self.ambient_dim(), &self.rows)
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.k != other.k {
            return Err(Error::DegreeMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(())
    }

    pub fn contains_vec(&self, v: &SparseVec) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains(&self, f: &Form) -> Result<bool> {
        check_form(self.n, self.k, f)?;
        Ok(self.contains_vec(&f.to_sparse()))
    }

    pub fn contains_space(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        let e = self.echelon();
        Ok(other.rows.iter().all(|r| e.contains(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let mut vs = self.rows.clone();
        vs.extend(other.rows.iter().cloned());
        Ok(Subspace::from_vectors(self.n, self.k, &vs))
    }

    pub fn sum_all(n: usize, k: usize, parts: &[&Subspace]) -> Result<Subspace> {
        let mut vs = Vec::new();
        for p in parts {
            if p.n != n || p.k != k {
                return Err(Error::DegreeMismatch {
                    expected: k,
                    found: p.k,
                });
            }
            vs.extend(p.rows.iter().cloned());
        }
        Ok(Subspace::from_vectors(n, k, &vs))
    }

    /// Orthogonal complement under the blade metric.
    pub fn complement(&self) -> Subspace {
        let kernel = self.echelon().kernel_basis();
        Subspace::from_vectors(self.n, self.k, &kernel)
    }

    /// `A ∩ B = (A^⊥ + B^⊥)^⊥`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(self.complement().sum(&other.complement())?.complement())
    }

    /// `λ ∧ E`.
    pub fn wedge_covector(&self, lambda: &Form) -> Result<Subspace> {
        check_covector(self.n, lambda)?;
        if self.k + 1 > self.n {
            return Err(Error::DegreeOverflow {
                degree: self.k + 1,
                n: self.n,
            });
        }
        let blades = Blade::all(self.n, self.k);
        let vs: Vec<SparseVec> = self
            .rows
            .iter()
            .map(|r| wedge_covector_vec(lambda, &blades, r))
            .collect();
        Ok(Subspace::from_vectors(self.n, self.k + 1, &vs))
    }

    /// `E·Λⁱ`, the span of `e ∧ B` over the basis of `E` and all blades of
    /// degree `i`.
    pub fn product_space(&self, i: usize) -> Result<Subspace> {
        if self.k + i > self.n {
            return Err(Error::DegreeOverflow {
                degree: self.k + i,
                n: self.n,
            });
        }
        if i == 0 {
            return Ok(self.clone());
        }
        let blades = Blade::all(self.n, self.k);
        let mut vs = Vec::with_capacity(self.rows.len() * binomial(self.n, i));
        for b in Blade::all(self.n, i) {
            for r in &self.rows {
                // e ∧ B = (-1)^{k i} B ∧ e
                let mut v = wedge_blade_left(self.n, b.mask(), &blades, r);
                if self.k * i % 2 == 1 {
                    for (_, x) in v.iter_mut() {
                        *x = -x.clone();
                    }
                }
                if !v.is_empty() {
                    vs.push(v);
                }
            }
        }
        Ok(Subspace::from_vectors(self.n, self.k + i, &vs))
    }

    /// Smallest `r` with `E·Λ^{r+1} = Λ^{k+r+1}`, counting from `r = 0`.
    /// A full `E` has `r = 0`.
    pub fn saturation_degree(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::NeverSaturates);
        }
        if self.is_full() {
            return Ok(0);
        }
        let mut cur = self.clone();
        let mut r = 0;
        loop {
            if cur.k + 1 > cur.n {
                // Λⁿ⁺¹ = 0 is trivially full
                return Ok(r);
            }
            let next = cur.product_space(1)?;
            if next.is_full() {
                return Ok(r);
            }
            cur = next;
            r += 1;
        }
    }

    /// Coordinates of `v` with respect to the RREF basis, or `None` if `v`
    /// is not in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self
            .rows
            .iter()
            .map(|r| get(v, r[0].0).cloned().unwrap_or_else(Rational::zero))
            .collect();
        let mut residual = v.clone();
        for (r, c) in self.rows.iter().zip(&coords) {
            if !c.is_zero() {
                residual = sub_scaled(&residual, c, r);
            }
        }
        residual.is_empty().then_some(coords)
    }

    pub fn form_coordinates(&self, f: &Form) -> Result<Option<Vec<Rational>>> {
        check_form(self.n, self.k, f)?;
        Ok(self.coordinates(&f.to_sparse()))
    }

    pub fn projector(&self) -> Projector {
        Projector::new(self)
    }

    /// `*E ⊂ Λⁿ⁻ᵏ`.
    pub fn hodge_star(&self) -> Subspace {
        let forms: Vec<Form> = self.basis_forms().iter().map(|f| f.hodge_star()).collect();
        let vs: Vec<SparseVec> = forms.iter().map(|f| f.to_sparse()).collect();
        Subspace::from_vectors(self.n, self.n - self.k, &vs)
    }

    /// Image under the substitution of [`Form::substitute`].
    pub fn substitute(&self, g: &[Vec<Rational>]) -> Result<Subspace> {
        let forms = self
            .basis_forms()
            .iter()
            .map(|f| f.substitute(g))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.n, self.k, &forms)
    }
}

pub(crate) fn check_form(n: usize, k: usize, f: &Form) -> Result<()> {
    if f.ambient() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: f.ambient(),
        });
    }
    if f.degree() != k {
        return Err(Error::DegreeMismatch {
            expected: k,
            found: f.degree(),
        });
    }
    Ok(())
}

pub(crate) fn check_covector(n: usize, lambda: &Form) -> Result<()> {
    check_form(n, 1, lambda)?;
    if lambda.is_zero() {
        return Err(Error::ZeroCovector);
    }
    Ok(())
}

/// Orthogonal projection onto a fixed subspace, `P = Bᵀ(BBᵀ)⁻¹B`.
#[derive(Clone, Debug)]
pub struct Projector {
    n: usize,
    k: usize,
    basis: Vec<SparseVec>,
    gram_inv: QMatrix,
}

impl Projector {
    pub fn new(space: &Subspace) -> Self {
        let d = space.dim();
        let mut gram = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let v = dot(&space.rows[i], &space.rows[j]);
                gram.set(i, j, v.clone());
                gram.set(j, i, v);
            }
        }
        let gram_inv = gram.inverse().expect("Gram matrix of a basis is invertible");
        Projector {
            n: space.n,
            k: space.k,
            basis: space.rows.clone(),
            gram_inv,
        }
    }

    pub fn project_vec(&self, v: &SparseVec) -> SparseVec {
        let b: Vec<Rational> = self.basis.iter().map(|r| dot(r, v)).collect();
        let c = self.gram_inv.apply(&b).expect("sizes agree");
        let mut out: SparseVec = Vec::new();
        for (r, x) in self.basis.iter().zip(&c) {
            if !x.is_zero() {
                out = sub_scaled(&out, &-x.clone(), r);
            }
        }
        out
    }

    pub fn project(&self, f: &Form) -> Result<Form> {
        check_form(self.n, self.k, f)?;
        Ok(Form::from_sparse(self.n, self.k, &self.project_vec(&f.to_sparse())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn w(n: usize, words: &[(i64, &str)]) -> Form {
        Form::from_words(n, words).unwrap()
    }

    #[test]
    fn span_ignores_multiples_and_zero() {
        let a = w(4, &[(1, "12")]);
        let s = Subspace::span(4, 2, &[a.clone(), a.scale(&int(2)), Form::zero(4, 2)]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(Subspace::span(4, 2, &[]).unwrap().dim(), 0);
    }

    #[test]
    fn complement_and_intersection() {
        let s = Subspace::span(4, 2, &[w(4, &[(1, "12"), (1, "34")]), w(4, &[(1, "13")])]).unwrap();
        let c = s.complement();
        assert_eq!(c.dim(), 4);
        assert_eq!(c.complement(), s);
        assert!(s.intersect(&c).unwrap().is_zero());
        assert_eq!(Subspace::zero(5, 2).complement(), Subspace::full(5, 2));
    }

    #[test]
    fn product_of_full_is_full() {
        let f = Subspace::full(6, 2);
        assert!(f.product_space(2).unwrap().is_full());
        assert!(f.product_space(5).is_err());
    }

    #[test]
    fn coordinates_and_projection() {
        let s = Subspace::span(4, 2, &[w(4, &[(1, "12"), (1, "34")])]).unwrap();
        let v = w(4, &[(3, "12"), (3, "34")]);
        assert_eq!(s.form_coordinates(&v).unwrap(), Some(vec![int(3)]));
        assert_eq!(s.form_coordinates(&w(4, &[(1, "12")])).unwrap(), None);
        let p = s.projector();
        let half = w(4, &[(1, "12"), (1, "34")]).scale(&crate::linalg::rational::frac(1, 2));
        assert_eq!(p.project(&w(4, &[(1, "12")])).unwrap(), half);
    }

    #[test]
    fn span_shortcut_agrees_with_exact() {
        let vs: Vec<SparseVec> = vec![
            vec![(0, int(1)), (3, int(2))],
            vec![(1, int(1)), (3, int(-1))],
            vec![(0, int(2)), (1, int(2)), (3, int(2))],
            vec![(2, int(5))],
        ];
        let mut e = Echelon::new(5);
        for v in &vs {
            e.insert(v);
        }
        assert_eq!(span_rref(5, &vs), e.into_rref());
    }
}
