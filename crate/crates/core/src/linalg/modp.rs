//! Rank lower bounds over the prime field `F_p`, `p = 2^61 - 1`.
//!
//! For a matrix with `p`-integral rational entries the rank of its reduction
//! modulo `p` never exceeds its rank over ℚ, so a modular rank is a certified
//! lower bound. The symbol-complex builders combine these bounds with the
//! complex property to certify exactness without rational elimination.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::rational::{Rational, SparseVec};

pub const PRIME: u64 = (1u64 << 61) - 1;

#[inline]
pub(crate) fn mul(a: u64, b: u64) -> u64 {
    let prod = (a as u128) * (b as u128);
    let lo = (prod as u64) & PRIME;
    let hi = (prod >> 61) as u64;
    let s = lo + hi;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

#[inline]
pub(crate) fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, PRIME - 2)
}

fn reduce_int(v: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let mut r = v % &p;
    if r < BigInt::zero() {
        r += &p;
    }
    r.to_u64().expect("residue fits in u64")
}

/// Image of a rational in `F_p`, or `None` if `p` divides the denominator.
pub fn reduce(q: &Rational) -> Option<u64> {
    let d = reduce_int(q.denom());
    if d == 0 {
        return None;
    }
    Some(mul(reduce_int(q.numer()), inv(d)))
}

/// Dense matrix over `F_p`, built row by row.
#[derive(Clone, Debug)]
pub struct ModpRows {
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl ModpRows {
    pub fn new(cols: usize) -> Self {
        ModpRows {
            cols,
            rows: Vec::new(),
        }
    }

    /// Returns `false` (and leaves the matrix unchanged) if some entry is not
    /// `p`-integral.
    pub fn push_sparse(&mut self, v: &SparseVec) -> bool {
        let mut row = vec![0u64; self.cols];
        for (c, x) in v {
            match reduce(x) {
                Some(r) => row[*c] = r,
                None => return false,
            }
        }
        self.rows.push(row);
        true
    }

    pub fn push_dense(&mut self, row: Vec<u64>) {
        debug_assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: &ModpRows) {
        debug_assert_eq!(self.cols, other.cols);
        self.rows.extend(other.rows.iter().cloned());
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.rows.clone();
        let rows = m.len();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(rank, p);
            let pinv = inv(m[rank][c]);
            for x in &mut m[rank][c..self.cols] {
                *x = mul(*x, pinv);
            }
            let pivot_row = m[rank].clone();
            for row in m.iter_mut().skip(rank + 1) {
                let f = row[c];
                if f != 0 {
                    for j in c..self.cols {
                        if pivot_row[j] != 0 {
                            row[j] = sub(row[j], mul(f, pivot_row[j]));
                        }
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Incremental row reduction over `F_p`. Each stored row is monic at its
/// pivot and vanishes at the pivots of earlier rows.
#[derive(Clone, Debug)]
pub struct ModpEchelon {
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModpEchelon {
    pub fn new(cols: usize) -> Self {
        ModpEchelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Returns `true` if `v` was independent of the stored rows.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        if self.is_full() {
            return false;
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p];
            if f != 0 {
                for j in 0..self.cols {
                    if row[j] != 0 {
                        v[j] = sub(v[j], mul(f, row[j]));
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let pinv = inv(v[p]);
        for x in v.iter_mut() {
            *x = mul(*x, pinv);
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Reduces a sparse rational vector and inserts it; `None` if it is not
    /// `p`-integral.
    pub fn insert_sparse(&mut self, v: &SparseVec) -> Option<bool> {
        let mut row = vec![0u64; self.cols];
        for (c, x) in v {
            row[*c] = reduce(x)?;
        }
        Some(self.insert(row))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    #[test]
    fn inverse_roundtrip() {
        for a in [1u64, 2, 7, 12345, PRIME - 1] {
            assert_eq!(mul(a, inv(a)), 1);
        }
        assert_eq!(reduce(&frac(1, 7)).map(|x| mul(x, 7)), Some(1));
        assert_eq!(reduce(&int(-1)), Some(PRIME - 1));
    }

    #[test]
    fn rank_small() {
        let mut m = ModpRows::new(3);
        m.push_sparse(&vec![(0, int(1)), (1, int(2))]);
        m.push_sparse(&vec![(0, int(2)), (1, int(4))]);
        m.push_sparse(&vec![(2, frac(1, 3))]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn incremental_matches_batch() {
        let vs = vec![
            vec![(0, int(1)), (1, int(2))],
            vec![(1, int(1)), (2, int(1))],
            vec![(0, int(1)), (1, int(3)), (2, int(1))],
            vec![(2, frac(2, 5))],
        ];
        let mut e = ModpEchelon::new(3);
        let grew: Vec<bool> = vs.iter().map(|v| e.insert_sparse(v).unwrap()).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        let mut m = ModpRows::new(3);
        for v in &vs {
            m.push_sparse(v);
        }
        assert_eq!(m.rank(), e.rank());
    }
}
