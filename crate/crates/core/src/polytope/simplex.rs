//! Dense-tableau two-phase simplex over the rationals with Bland's rule.
//!
//! Problems are given in equality form: maximise `c . x` subject to
//! `A x = b`, `x >= 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    Optimal { x: Vec<Q>, value: Q },
    /// A Farkas ray `y` with `A^T y <= 0` and `b . y > 0`.
    Infeasible { ray: Vec<Q> },
    Unbounded,
}

struct Tableau {
    /// `m` rows of `n` structural columns, `m` artificial columns, then the
    /// right-hand side.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    n: usize,
    m: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Q {
        &self.rows[i][self.n + self.m]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimises `cost . x` over the columns accepted by `allowed`, starting
    /// from the current basis. Returns `false` if the problem is unbounded.
    fn minimise(&mut self, cost: &[Q], allowed: impl Fn(usize) -> bool) -> bool {
        let width = self.n + self.m;
        loop {
            let entering = (0..width).filter(|&j| allowed(j) && !self.basis.contains(&j)).find(|&j| {
                let mut r = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !cost[b].is_zero() && !row[j].is_zero() {
                        r -= &cost[b] * &row[j];
                    }
                }
                r.is_negative()
            });
            let Some(j) = entering else { return true };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, j);
        }
    }

    fn objective(&self, cost: &[Q]) -> Q {
        self.basis.iter().enumerate().map(|(i, &b)| &cost[b] * self.rhs(i)).sum()
    }
}

pub(crate) fn solve(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == m);

    let flips: Vec<bool> = b.iter().map(Signed::is_negative).collect();
    let rows = (0..m)
        .map(|i| {
            let s = if flips[i] { -Q::one() } else { Q::one() };
            let mut row: Vec<Q> = a[i].iter().map(|x| x * &s).collect();
            row.extend((0..m).map(|k| if k == i { Q::one() } else { Q::zero() }));
            row.push(&b[i] * &s);
            row
        })
        .collect();
    let mut t = Tableau { rows, basis: (n..n + m).collect(), n, m };

    let mut phase1 = vec![Q::zero(); n + m];
    for x in &mut phase1[n..] {
        *x = Q::one();
    }
    t.minimise(&phase1, |_| true);
    if t.objective(&phase1).is_positive() {
        // y = c_B^T B^{-1}; B^{-1} sits in the artificial columns.
        let ray = (0..m)
            .map(|k| {
                let y: Q = t
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|(_, &bi)| bi >= n)
                    .map(|(i, _)| t.rows[i][n + k].clone())
                    .sum();
                if flips[k] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        return LpOutcome::Infeasible { ray };
    }

    // Drive zero-level artificials out of the basis, dropping redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase2: Vec<Q> = c.iter().map(|x| -x).collect();
    phase2.extend((0..m).map(|_| Q::zero()));
    if !t.minimise(&phase2, |j| j < n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &bi) in t.basis.iter().enumerate() {
        x[bi] = t.rhs(i).clone();
    }
    let value = x.iter().zip(c).map(|(x, c)| x * c).sum();
    LpOutcome::Optimal { x, value }
}
