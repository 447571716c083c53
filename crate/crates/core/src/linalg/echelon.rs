use num_traits::{One, Zero};

use super::rational::{sub_scaled, Rational, SparseVec};

/// Incrementally maintained reduced row-echelon basis.
///
/// Every stored row has leading entry 1 at its pivot column and zeros in all
/// other pivot columns. The pivot of an inserted row is its first nonzero
/// column after reduction, so the final basis depends only on the span.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<SparseVec>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    /// Seeds the basis with rows that are already in reduced row-echelon form.
    pub fn from_rref(cols: usize, rows: &[SparseVec]) -> Self {
        let mut e = Echelon::new(cols);
        for row in rows {
            let p = row[0].0;
            debug_assert!(row[0].1.is_one());
            e.pivot_of_col[p] = Some(e.rows.len());
            e.rows.push(row.clone());
        }
        e
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (c, a) in v {
            if let Some(r) = self.pivot_of_col[*c] {
                out = sub_scaled(&out, a, &self.rows[r]);
            }
        }
        out
    }

    /// Inserts a vector; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        if self.is_full() {
            return false;
        }
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let (pivot, lead) = r[0].clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, x) in r.iter_mut() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                let coef = row[pos].1.clone();
                *row = sub_scaled(row, &coef, &r);
            }
        }
        self.pivot_of_col[pivot] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Rows sorted by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        rows
    }

    pub fn rref(&self) -> Vec<SparseVec> {
        self.clone().into_rref()
    }

    /// Basis of the orthogonal complement of the row space, i.e. the kernel
    /// of the matrix whose rows are the stored basis. One vector per free
    /// column, in increasing column order.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let rows = self.rref();
        let mut pivot_cols = vec![false; self.cols];
        for r in &rows {
            pivot_cols[r[0].0] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols[*c]) {
            let mut v: SparseVec = Vec::new();
            for r in &rows {
                if let Some(x) = super::rational::get(r, free) {
                    v.push((r[0].0, -x.clone()));
                }
            }
            v.push((free, Rational::one()));
            v.sort_by_key(|(c, _)| *c);
            out.push(v);
        }
        out
    }
}

/// Rank of an arbitrary set of sparse rows.
pub fn rank_of(cols: usize, rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new(cols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

pub fn is_zero_vec(v: &SparseVec) -> bool {
    v.iter().all(|(_, x)| x.is_zero())
}
