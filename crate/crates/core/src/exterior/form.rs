use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::blade::{binomial, Blade};
use crate::error::{Error, Result};
use crate::linalg::rational::{int, Rational, SparseVec};

/// A homogeneous element of `Λᵏ(ℝⁿ)` with exact rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is equality of
/// forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    n: usize,
    k: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl Form {
    pub fn zero(n: usize, k: usize) -> Self {
        Form {
            n,
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut f = Form::zero(n, 0);
        f.add_term(Blade::unit(n), c);
        f
    }

    pub fn one(n: usize) -> Self {
        Form::scalar(n, Rational::one())
    }

    pub fn volume(n: usize) -> Self {
        Form::from_blade(Blade::volume(n))
    }

    pub fn from_blade(b: Blade) -> Self {
        let mut f = Form::zero(b.ambient(), b.degree());
        f.add_term(b, Rational::one());
        f
    }

    /// The coordinate covector `ωⁱ` (1-based).
    pub fn covector(n: usize, i: usize) -> Result<Self> {
        Ok(Form::from_blade(Blade::new(n, &[i])?))
    }

    /// A covector from its `n` coordinates.
    pub fn from_covector_coords(coords: &[Rational]) -> Self {
        let n = coords.len();
        let mut f = Form::zero(n, 1);
        for (i, c) in coords.iter().enumerate() {
            f.add_term(Blade::from_mask(n, 1 << i), c.clone());
        }
        f
    }

    pub fn from_terms<I>(n: usize, k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        if k > n {
            return Err(Error::DegreeOverflow { degree: k, n });
        }
        let mut f = Form::zero(n, k);
        for (b, c) in terms {
            if b.ambient() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: b.ambient(),
                });
            }
            if b.degree() != k {
                return Err(Error::DegreeMismatch {
                    expected: k,
                    found: b.degree(),
                });
            }
            f.add_term(b, c);
        }
        Ok(f)
    }

    /// Builds a form from signed index words such as `(1, "123")`, one digit
    /// per index. Only meaningful for `n ≤ 9`.
    pub fn from_words(n: usize, words: &[(i64, &str)]) -> Result<Self> {
        let mut terms = Vec::with_capacity(words.len());
        let mut k = None;
        for (c, w) in words {
            let idx: Vec<usize> = w
                .chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidBlade(format!("bad index word {w:?}")))
                })
                .collect::<Result<_>>()?;
            let b = Blade::new(n, &idx)?;
            match k {
                None => k = Some(b.degree()),
                Some(d) if d != b.degree() => {
                    return Err(Error::DegreeMismatch {
                        expected: d,
                        found: b.degree(),
                    })
                }
                _ => {}
            }
            terms.push((b, int(*c)));
        }
        let k = k.ok_or_else(|| Error::InvalidArgument("empty word list".into()))?;
        Form::from_terms(n, k, terms)
    }

    fn add_term(&mut self, b: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &Blade) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_same_ambient(&self, other: &Form) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    fn check_same_space(&self, other: &Form) -> Result<()> {
        self.check_same_ambient(other)?;
        if self.k != other.k {
            return Err(Error::DegreeMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(())
    }

    pub fn wedge(&self, other: &Form) -> Result<Form> {
        self.check_same_ambient(other)?;
        let mut out = Form::zero(self.n, self.k + other.k);
        if self.k + other.k > self.n {
            return Ok(out);
        }
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let s = a.wedge_sign(b);
                if s == 0 {
                    continue;
                }
                let c = x * y;
                let c = if s < 0 { -c } else { c };
                out.add_term(Blade::from_mask(self.n, a.mask() | b.mask()), c);
            }
        }
        Ok(out)
    }

    pub fn hodge_star(&self) -> Form {
        let mut out = Form::zero(self.n, self.n - self.k);
        for (b, x) in &self.terms {
            let c = b.complement();
            let v = if b.wedge_sign(&c) < 0 { -x.clone() } else { x.clone() };
            out.add_term(c, v);
        }
        out
    }

    pub fn inner(&self, other: &Form) -> Result<Rational> {
        self.check_same_space(other)?;
        let mut acc = Rational::zero();
        for (b, x) in &self.terms {
            if let Some(y) = other.terms.get(b) {
                acc += x * y;
            }
        }
        Ok(acc)
    }

    pub fn norm_squared(&self) -> Rational {
        self.terms.values().map(|x| x * x).sum()
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form::zero(self.n, self.k);
        }
        Form {
            n: self.n,
            k: self.k,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Form) -> Result<Form> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (b, x) in &other.terms {
            out.add_term(*b, x.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Form) -> Result<Form> {
        self.try_add(&-other)
    }

    /// Coordinates in the colex blade basis of `Λᵏ(ℝⁿ)`.
    pub fn to_sparse(&self) -> SparseVec {
        let mut v: SparseVec = self
            .terms
            .iter()
            .map(|(b, x)| (b.colex_index(), x.clone()))
            .collect();
        // BTreeMap order on equal (n, k) is mask order, which is colex order
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); binomial(self.n, self.k)];
        for (b, x) in &self.terms {
            out[b.colex_index()] = x.clone();
        }
        out
    }

    pub fn from_sparse(n: usize, k: usize, v: &SparseVec) -> Form {
        let blades = Blade::all(n, k);
        let mut f = Form::zero(n, k);
        for (i, x) in v {
            f.add_term(blades[*i], x.clone());
        }
        f
    }

    pub fn from_dense(n: usize, k: usize, v: &[Rational]) -> Form {
        let blades = Blade::all(n, k);
        let mut f = Form::zero(n, k);
        for (b, x) in blades.iter().zip(v) {
            f.add_term(*b, x.clone());
        }
        f
    }

    /// Relabels index `i` as `i + offset` inside `ℝ^{new_n}`.
    pub fn shift(&self, offset: usize, new_n: usize) -> Result<Form> {
        if self.n + offset > new_n {
            return Err(Error::InvalidArgument(format!(
                "cannot shift ℝ^{} by {offset} into ℝ^{new_n}",
                self.n
            )));
        }
        let mut out = Form::zero(new_n, self.k);
        for (b, x) in &self.terms {
            out.add_term(Blade::from_mask(new_n, b.mask() << offset), x.clone());
        }
        Ok(out)
    }

    /// Applies the linear substitution `ωⁱ ↦ Σⱼ g[j][i] ωʲ`, extended
    /// multiplicatively to all degrees.
    pub fn substitute(&self, g: &[Vec<Rational>]) -> Result<Form> {
        if g.len() != self.n || g.iter().any(|r| r.len() != self.n) {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: g.len(),
            });
        }
        let images: Vec<Form> = (0..self.n)
            .map(|i| Form::from_covector_coords(&g.iter().map(|r| r[i].clone()).collect::<Vec<_>>()))
            .collect();
        let mut out = Form::zero(self.n, self.k);
        for (b, x) in &self.terms {
            let mut acc = Form::scalar(self.n, x.clone());
            for i in b.indices() {
                acc = acc.wedge(&images[i - 1])?;
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }
}

impl Add for &Form {
    type Output = Form;

    /// Panics if the operands live in different spaces; see [`Form::try_add`].
    fn add(self, rhs: &Form) -> Form {
        self.try_add(rhs).expect("adding forms of different spaces")
    }
}

impl Sub for &Form {
    type Output = Form;

    fn sub(self, rhs: &Form) -> Form {
        self.try_sub(rhs).expect("subtracting forms of different spaces")
    }
}

impl Neg for &Form {
    type Output = Form;

    fn neg(self) -> Form {
        Form {
            n: self.n,
            k: self.k,
            terms: self.terms.iter().map(|(b, x)| (*b, -x.clone())).collect(),
        }
    }
}

impl Mul<&Form> for &Rational {
    type Output = Form;

    fn mul(self, rhs: &Form) -> Form {
        rhs.scale(self)
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, x)) in self.terms.iter().enumerate() {
            let neg = x.is_negative();
            let mag = x.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag}·{b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::frac;

    fn phi() -> Form {
        Form::from_words(
            7,
            &[(1, "123"), (1, "145"), (1, "167"), (1, "246"), (-1, "257"), (-1, "347"), (-1, "356")],
        )
        .unwrap()
    }

    #[test]
    fn wedge_basics() {
        let w1 = Form::covector(4, 1).unwrap();
        let w2 = Form::covector(4, 2).unwrap();
        let w12 = w1.wedge(&w2).unwrap();
        assert_eq!(w12, Form::from_words(4, &[(1, "12")]).unwrap());
        assert!(w12.wedge(&w12).unwrap().is_zero());
        assert_eq!(w2.wedge(&w1).unwrap(), -&w12);
    }

    #[test]
    fn phi_wedge_star_phi() {
        let p = phi();
        let v = p.wedge(&p.hodge_star()).unwrap();
        assert_eq!(v, Form::volume(7).scale(&int(7)));
        assert_eq!(p.inner(&p).unwrap(), int(7));
    }

    #[test]
    fn star_of_blades() {
        assert_eq!(Form::one(5).hodge_star(), Form::volume(5));
        let a = Form::from_words(7, &[(1, "123")]).unwrap();
        assert_eq!(a.hodge_star(), Form::from_words(7, &[(1, "4567")]).unwrap());
    }

    #[test]
    fn coordinates_roundtrip() {
        let f = Form::from_words(5, &[(2, "13"), (-1, "45")]).unwrap().scale(&frac(1, 3));
        assert_eq!(Form::from_sparse(5, 2, &f.to_sparse()), f);
        assert_eq!(Form::from_dense(5, 2, &f.to_dense()), f);
    }

    #[test]
    fn shift_and_substitute() {
        let f = Form::from_words(3, &[(1, "12")]).unwrap();
        assert_eq!(f.shift(1, 4).unwrap(), Form::from_words(4, &[(1, "23")]).unwrap());
        // swap ω¹ and ω²
        let g = vec![vec![int(0), int(1), int(0)], vec![int(1), int(0), int(0)], vec![int(0), int(0), int(1)]];
        assert_eq!(f.substitute(&g).unwrap(), -&f);
    }

    #[test]
    fn mixed_degrees_rejected() {
        assert!(Form::from_words(4, &[(1, "12"), (1, "123")]).is_err());
        let a = Form::covector(4, 1).unwrap();
        let b = Form::covector(5, 1).unwrap();
        assert!(a.wedge(&b).is_err());
        assert!(a.inner(&Form::from_words(4, &[(1, "12")]).unwrap()).is_err());
    }
}
