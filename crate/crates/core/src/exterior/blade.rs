use std::cmp::Ordering;
use std::fmt;

use crate::config::HARD_MAX_DIM;
use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A coordinate monomial `ω^{i₁⋯i_k}` with `i₁ < ⋯ < i_k`, stored as a bitmask
/// over `0..n` (bit `i-1` set for index `i`).
///
/// Blades of equal degree compare in colexicographic order, which coincides
/// with numeric order of the masks. Every matrix in the crate indexes rows and
/// columns in this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade {
    n: u8,
    mask: u32,
}

impl Blade {
    /// Builds a blade from strictly increasing 1-based indices.
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        if n == 0 || n > HARD_MAX_DIM {
            return Err(Error::InvalidBlade(format!("ambient dimension {n} out of range")));
        }
        let mut mask = 0u32;
        let mut prev = 0usize;
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::InvalidBlade(format!("index {i} outside 1..={n}")));
            }
            if i <= prev {
                return Err(Error::InvalidBlade(format!(
                    "indices {indices:?} are not strictly increasing"
                )));
            }
            prev = i;
            mask |= 1 << (i - 1);
        }
        Ok(Blade { n: n as u8, mask })
    }

    pub(crate) fn from_mask(n: usize, mask: u32) -> Self {
        debug_assert!(n <= HARD_MAX_DIM && (n == 32 || mask >> n == 0));
        Blade { n: n as u8, mask }
    }

    /// The empty blade (the scalar `1`).
    pub fn unit(n: usize) -> Self {
        Blade::from_mask(n, 0)
    }

    /// The volume blade `ω^{12⋯n}`.
    pub fn volume(n: usize) -> Self {
        Blade::from_mask(n, full_mask(n))
    }

    pub fn ambient(&self) -> usize {
        self.n as usize
    }

    pub fn degree(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.n as usize)
            .filter(|b| self.mask >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    pub fn contains(&self, index: usize) -> bool {
        index >= 1 && index <= self.n as usize && self.mask >> (index - 1) & 1 == 1
    }

    /// Position of this blade among all blades of its degree in colex order.
    pub fn colex_index(&self) -> usize {
        let mut rank = 0;
        let mut j = 0;
        let mut m = self.mask;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            j += 1;
            rank += binomial(c, j);
            m &= m - 1;
        }
        rank
    }

    pub fn complement(&self) -> Blade {
        Blade::from_mask(self.n as usize, full_mask(self.n as usize) & !self.mask)
    }

    /// Sign of the permutation sorting the concatenation `(self, other)`, or
    /// `0` when the blades share an index.
    pub fn wedge_sign(&self, other: &Blade) -> i32 {
        if self.mask & other.mask != 0 {
            return 0;
        }
        let mut inversions = 0u32;
        let mut m = other.mask;
        while m != 0 {
            let j = m.trailing_zeros();
            // indices of `self` above j each pass over this element
            inversions += (self.mask >> j).count_ones();
            m &= m - 1;
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All blades of degree `k` in ℝⁿ, in colex order.
    pub fn all(n: usize, k: usize) -> Vec<Blade> {
        if k > n {
            return Vec::new();
        }
        if k == 0 {
            return vec![Blade::unit(n)];
        }
        let mut out = Vec::with_capacity(binomial(n, k));
        let limit: u64 = 1u64 << n;
        let mut v: u64 = (1u64 << k) - 1;
        while v < limit {
            out.push(Blade::from_mask(n, v as u32));
            // Gosper's hack: next integer with the same popcount
            let c = v & v.wrapping_neg();
            let r = v + c;
            v = (((r ^ v) >> 2) / c) | r;
        }
        out
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.degree().cmp(&other.degree()))
            .then(self.mask.cmp(&other.mask))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "1");
        }
        let idx = self.indices();
        let sep = if self.n > 9 { "," } else { "" };
        let body: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        write!(f, "ω^{{{}}}", body.join(sep))
    }
}
