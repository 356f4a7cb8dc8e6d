//! Exact two-phase tableau simplex with Bland's rule.
//!
//! Problems are in standard form: maximize `c.x` subject to `A x = b`,
//! `x >= 0`. Bland's rule (lowest eligible index enters, lowest basic index
//! breaks ratio ties) rules out cycling, and all arithmetic is over exact
//! rationals, so the run is deterministic.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct StandardLp {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    // m rows of width cols + 1; the last entry is the right-hand side
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
    // reduced costs c_B B^-1 A_j - c_j, last entry the objective value
    obj: Vec<Rational>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let pv = self.rows[r][col].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x /= &pv;
            }
        }
        let pivot_row = core::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        for row in self.rows.iter_mut().chain(core::iter::once(&mut self.obj)) {
            if row.is_empty() || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for &j in &nonzero {
                row[j] -= &f * &pivot_row[j];
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = col;
    }

    /// Loads the objective `c` (maximized) as reduced costs for the current basis.
    fn set_objective(&mut self, c: &[Rational]) {
        let mut obj: Vec<Rational> = (0..=self.cols).map(|j| if j < c.len() { -c[j].clone() } else { Rational::zero() }).collect();
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            let cb = c.get(bv).cloned().unwrap_or_else(Rational::zero);
            if cb.is_zero() {
                continue;
            }
            for (o, x) in obj.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o += &cb * x;
                }
            }
        }
        self.obj = obj;
    }

    /// Runs simplex iterations over entering columns `0..allowed`.
    /// Returns `false` if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, enter);
        }
    }

    fn solution(&self, n: usize) -> Vec<Rational> {
        let mut x = alloc::vec![Rational::zero(); n];
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            if bv < n {
                x[bv] = row[self.cols].clone();
            }
        }
        x
    }
}

/// Solves `lp` exactly.
pub fn solve(lp: &StandardLp) -> LpOutcome {
    let m = lp.a.len();
    let n = lp.c.len();
    assert_eq!(lp.b.len(), m, "one right-hand side per row");
    let cols = n + m;
    // phase I: one artificial per row, rows sign-flipped so that b >= 0
    let rows: Vec<Vec<Rational>> = lp
        .a
        .iter()
        .zip(&lp.b)
        .enumerate()
        .map(|(i, (a, b))| {
            assert_eq!(a.len(), n, "ragged constraint matrix");
            let flip = b.is_negative();
            let mut row: Vec<Rational> = a.iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
            row.extend((0..m).map(|k| if k == i { int(1) } else { Rational::zero() }));
            row.push(if flip { -b.clone() } else { b.clone() });
            row
        })
        .collect();
    let mut tab = Tableau {
        rows,
        basis: (n..n + m).collect(),
        cols,
        obj: Vec::new(),
    };
    let mut phase1 = alloc::vec![Rational::zero(); cols];
    for c in phase1.iter_mut().skip(n) {
        *c = int(-1);
    }
    tab.set_objective(&phase1);
    tab.optimize(cols);
    let infeasibility: Rational = tab
        .rows
        .iter()
        .zip(&tab.basis)
        .filter(|(_, &bv)| bv >= n)
        .map(|(row, _)| row[cols].clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }
    // drive artificials out of the basis; rows where that is impossible are redundant
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, col);
            } else {
                tab.rows.remove(r);
                tab.basis.remove(r);
                continue;
            }
        }
        r += 1;
    }
    tab.set_objective(&lp.c);
    if !tab.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let x = tab.solution(n);
    let value = x.iter().zip(&lp.c).map(|(x, c)| x * c).sum();
    LpOutcome::Optimal { x, value }
}
