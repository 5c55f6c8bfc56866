//! Exact reduced row echelon forms over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A subspace given by its reduced row echelon basis. The representation is
/// canonical, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Rref {
    ncols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<BigRational>>,
}

impl Rref {
    pub fn empty(ncols: usize) -> Self {
        Self { ncols, pivots: Vec::new(), rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    /// The span with `v` added, or `None` if `v` is already in the span.
    pub fn with_row(&self, v: &[BigRational]) -> Option<Self> {
        debug_assert_eq!(v.len(), self.ncols);
        let mut r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let lead = r[p].clone();
        for x in r.iter_mut() {
            *x /= &lead;
        }
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        let mut pivots = self.pivots.clone();
        pivots.insert(at, p);
        rows.insert(at, r);
        Some(Self { ncols: self.ncols, pivots, rows })
    }

    /// A basis of the orthogonal complement `{x : row . x = 0 for all rows}`.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.pivots.contains(c)) {
            let mut x = vec![BigRational::zero(); self.ncols];
            x[free] = BigRational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x[p] = -row[free].clone();
            }
            out.push(x);
        }
        out
    }
}

/// Rank of a set of rational vectors of length `ncols`.
pub(crate) fn rank(ncols: usize, rows: impl IntoIterator<Item = Vec<BigRational>>) -> usize {
    let mut basis = Rref::empty(ncols);
    for row in rows {
        if let Some(next) = basis.with_row(&row) {
            basis = next;
            if basis.rank() == ncols {
                break;
            }
        }
    }
    basis.rank()
}
