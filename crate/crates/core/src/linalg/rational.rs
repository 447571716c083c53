use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn parse(num: &str, den: &str) -> Result<Rational> {
    let n: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator {num:?}")))?;
    let d: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_str(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        Some((n, d)) => parse(n, d),
        None => parse(s, "1"),
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Scales a vector to integer entries with content 1 and a positive leading
/// entry. Returns the integers.
pub fn primitive_integers(values: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in values.iter().filter(|v| !v.is_zero()) {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = g.gcd(i);
    }
    if g.is_zero() {
        return ints;
    }
    let lead_negative = ints.iter().find(|i| !i.is_zero()).is_some_and(|i| i.is_negative());
    if lead_negative {
        g = -g;
    }
    for i in &mut ints {
        *i = &*i / &g;
    }
    ints
}

pub fn sparse_from_dense(values: &[Rational]) -> SparseVec {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `a - c·b` for sparse vectors.
pub fn sub_scaled(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &SparseVec, c: &Rational) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn dot(a: &SparseVec, b: &SparseVec) -> Rational {
    let mut acc = Rational::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

pub fn get(v: &SparseVec, col: usize) -> Option<&Rational> {
    v.binary_search_by_key(&col, |(c, _)| *c).ok().map(|p| &v[p].1)
}
