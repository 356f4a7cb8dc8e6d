//! Exact kernels and ranks.
//!
//! Elimination runs on integer rows: a row is updated as
//! `pivot * row - entry * pivot_row` and then divided by its content, so no
//! fractions appear until the reduced rows are normalized at the end.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// Reduced row echelon form of an integer matrix together with its kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    pub cols: usize,
    /// Nonzero rows of the reduced row echelon form, pivot entries equal to 1.
    pub rref: Vec<Vec<Rational>>,
    /// Pivot column of each row of `rref`.
    pub pivots: Vec<usize>,
    /// Indices of input rows forming a maximal independent subset.
    pub independent_rows: Vec<usize>,
    /// Non-pivot columns in increasing order.
    pub free: Vec<usize>,
    /// One basis vector per free column: 1 there, 0 on other free columns.
    pub basis: Vec<Vec<Rational>>,
}

impl Kernel {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }
}

fn divide_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Kernel of the `rows.len() x cols` integer matrix.
pub fn kernel(rows: &[Vec<i64>], cols: usize) -> Kernel {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut origin: Vec<usize> = (0..m.len()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        origin.swap(rank, p);
        let pivot_row = m[rank].clone();
        let pv = pivot_row[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let e = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &pv * &*x - &e * y;
            }
            divide_content(row);
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    // a row chosen as pivot is its input row plus earlier pivot rows
    let mut independent_rows = origin[..rank].to_vec();
    independent_rows.sort_unstable();
    let rref: Vec<Vec<Rational>> = m
        .iter()
        .zip(&pivots)
        .map(|(row, &pc)| {
            let pv = row[pc].clone();
            row.iter().map(|x| Rational::new(x.clone(), pv.clone())).collect()
        })
        .collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = alloc::vec![Rational::zero(); cols];
            v[f] = Rational::from_integer(BigInt::from(1));
            for (row, &pc) in rref.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect();
    Kernel {
        cols,
        rref,
        pivots,
        independent_rows,
        free,
        basis,
    }
}

/// Rank of a list of rational vectors of equal length.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = vectors.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot_row[col];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// `sum_j a[j] * x[j]` for an integer row.
pub fn dot_int(a: &[i64], x: &[Rational]) -> Rational {
    a.iter()
        .zip(x)
        .filter(|(c, _)| **c != 0)
        .fold(Rational::zero(), |acc, (&c, v)| acc + v * BigInt::from(c))
}

pub fn is_nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn kernel_of_single_row() {
        // x0 - x1 + x2 = 0
        let k = kernel(&[alloc::vec![1, -1, 1]], 3);
        assert_eq!(k.rank(), 1);
        assert_eq!(k.pivots, [0]);
        assert_eq!(k.free, [1, 2]);
        assert_eq!(k.basis[0], [int(1), int(1), int(0)]);
        assert_eq!(k.basis[1], [int(-1), int(0), int(1)]);
    }

    #[test]
    fn redundant_rows_and_zero_matrix() {
        let k = kernel(&[alloc::vec![1, 1, 0], alloc::vec![2, 2, 0], alloc::vec![0, 1, 1]], 3);
        assert_eq!(k.rank(), 2);
        assert_eq!(k.dimension(), 1);
        assert_eq!(k.independent_rows, [0, 2]);
        for row in [[1i64, 1, 0], [0, 1, 1]] {
            assert_eq!(dot_int(&row, &k.basis[0]), int(0));
        }
        let k = kernel(&[], 4);
        assert_eq!(k.dimension(), 4);
    }

    #[test]
    fn rank_of_rationals() {
        let v = alloc::vec![
            alloc::vec![int(1), int(2)],
            alloc::vec![int(2), int(4)],
            alloc::vec![int(0), int(1)],
        ];
        assert_eq!(rank(&v), 2);
        assert_eq!(rank(&v[..2]), 1);
        assert_eq!(rank(&[]), 0);
    }
}
