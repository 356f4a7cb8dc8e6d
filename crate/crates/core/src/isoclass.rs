//! Canonical labeling, isomorphism tests and class enumeration.
//!
//! The canonical code of a tournament is the lexicographically smallest
//! `"n:bits"` code over all relabelings. It is found by ordered-partition
//! search: position `m` of the relabeling must be filled from the first cell
//! of the current partition, and the candidate it gets is one whose row of the
//! code is smallest. A candidate splits every later cell into the players it
//! does not beat (first) and those it beats (last), which is what a minimal
//! row needs. Ties branch; branches whose prefix already exceeds the best
//! complete code are cut.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::tournament::{Error, ParseError, Tournament};

/// Largest `n` for which canonicalization is supported (the code must fit in 128 bits).
pub const MAX_CANONICAL: usize = 12;

/// Largest `n` for which class enumeration is supported.
pub const MAX_ENUMERATE: usize = 8;

/// A canonical `"n:bits"` code; the order is the lexicographic order of the text for fixed `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    // code bits, first pair in the most significant position
    bits: u128,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn tournament(&self) -> Tournament {
        let n = self.n();
        let len = n * (n - 1) / 2;
        let mut idx = 0;
        Tournament::from_upper(n, |_, _| {
            idx += 1;
            self.bits >> (len - idx) & 1 == 1
        })
    }

    fn of(t: &Tournament) -> CanonicalCode {
        let bits = t.bits().fold(0u128, |acc, b| acc << 1 | b as u128);
        CanonicalCode { n: t.n() as u8, bits }
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.n() * (self.n() - 1) / 2;
        write!(f, "{}:", self.n)?;
        for p in (0..len).rev() {
            f.write_str(if self.bits >> p & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

impl FromStr for CanonicalCode {
    type Err = ParseError;

    /// Parses any tournament code and canonicalizes it.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(canonical_code(&Tournament::parse(s)?))
    }
}

struct Search<'a> {
    t: &'a Tournament,
    n: usize,
    len: usize,
    best: Option<u128>,
}

impl Search<'_> {
    /// Code bits contributed by rows `0..m`.
    fn prefix_len(&self, m: usize) -> usize {
        // rows 0..m have lengths n-1, n-2, .., n-m
        m * (2 * self.n - m - 1) / 2
    }

    fn run(&mut self, m: usize, prefix: u128, cells: &[u16]) {
        let n = self.n;
        if m == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        if let Some(best) = self.best {
            let plen = self.prefix_len(m);
            let best_prefix = if plen == 0 { 0 } else { best >> (self.len - plen) };
            if prefix > best_prefix {
                return;
            }
        }
        let first = cells[0];
        let mut min_row = u32::MAX;
        let mut tied: u16 = 0;
        let mut rest = first;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let row = self.row(v, first & !(1 << v), &cells[1..]);
            if row < min_row {
                min_row = row;
                tied = 1 << v;
            } else if row == min_row {
                tied |= 1 << v;
            }
        }
        let row_len = n - m - 1;
        let next_prefix = prefix << row_len | min_row as u128;
        let mut next_cells: Vec<u16> = Vec::with_capacity(cells.len() + 2);
        while tied != 0 {
            let v = tied.trailing_zeros() as usize;
            tied &= tied - 1;
            next_cells.clear();
            let beaten = self.t.out_mask(v);
            for &c in core::iter::once(&(first & !(1 << v))).chain(&cells[1..]) {
                let lose = c & !beaten;
                let win = c & beaten;
                if lose != 0 {
                    next_cells.push(lose);
                }
                if win != 0 {
                    next_cells.push(win);
                }
            }
            self.run(m + 1, next_prefix, &next_cells);
        }
    }

    /// Row of the code for `v` placed next, with the remaining cells in order.
    fn row(&self, v: usize, head: u16, tail: &[u16]) -> u32 {
        let beaten = self.t.out_mask(v);
        let mut row = 0u32;
        for &c in core::iter::once(&head).chain(tail) {
            let lose = (c & !beaten).count_ones();
            let win = (c & beaten).count_ones();
            row <<= lose;
            row = row << win | ((1u32 << win) - 1);
        }
        row
    }
}

/// Lexicographically minimal code over all relabelings.
///
/// # Panics
///
/// If `t` has more than [`MAX_CANONICAL`] players.
pub fn canonical_code(t: &Tournament) -> CanonicalCode {
    let n = t.n();
    assert!(n <= MAX_CANONICAL, "canonical codes are supported for n <= {MAX_CANONICAL}");
    let len = n * (n - 1) / 2;
    let mut search = Search {
        t,
        n,
        len,
        best: None,
    };
    let all: u16 = ((1u32 << n) - 1) as u16;
    search.run(0, 0, &[all]);
    CanonicalCode {
        n: n as u8,
        bits: search.best.expect("search always completes one branch"),
    }
}

/// Lexicographically minimal code by scanning all `n!` relabelings. Reference
/// implementation for small `n`.
pub fn canonical_code_exhaustive(t: &Tournament) -> CanonicalCode {
    let n = t.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = CanonicalCode::of(t);
    // Heap's algorithm
    let mut c = alloc::vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let code = CanonicalCode::of(&t.relabel0(|v| perm[v]));
            if code < best {
                best = code;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Isomorphism test; score multisets are compared before canonicalizing.
pub fn are_isomorphic(a: &Tournament, b: &Tournament) -> Result<bool, Error> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch { left: a.n(), right: b.n() });
    }
    if a.score_vector().sorted() != b.score_vector().sorted() {
        return Ok(false);
    }
    Ok(canonical_code(a) == canonical_code(b))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("class enumeration supports 2 <= n <= {MAX_ENUMERATE}, got {0}")]
pub struct RangeError(pub usize);

/// The `2^(n-1)` one-player extensions of `base`; the new player is `n`.
pub fn extensions(base: &Tournament) -> impl Iterator<Item = Tournament> + '_ {
    let m = base.n();
    (0u32..1 << m).map(move |mask| {
        Tournament::from_upper(m + 1, |i, j| {
            if j == m {
                // new player beats i iff bit i of mask is set
                mask >> i & 1 == 0
            } else {
                base.beats0(i, j)
            }
        })
    })
}

/// One canonical code per isomorphism class of `n`-tournaments, sorted.
///
/// Built by augmentation: every class on `n - 1` players is extended by all
/// orientations towards a new player, and the results are deduplicated by
/// canonical code.
pub fn enumerate_classes(n: usize) -> Result<Vec<CanonicalCode>, RangeError> {
    if !(2..=MAX_ENUMERATE).contains(&n) {
        return Err(RangeError(n));
    }
    let mut classes = alloc::vec![canonical_code(&Tournament::canonical(2))];
    for _ in 3..=n {
        classes = augment(&classes);
    }
    Ok(classes)
}

/// Extends each class by one player and deduplicates.
pub fn augment(classes: &[CanonicalCode]) -> Vec<CanonicalCode> {
    let mut seen = BTreeSet::new();
    for c in classes {
        let base = c.tournament();
        seen.extend(extensions(&base).map(|t| canonical_code(&t)));
    }
    seen.into_iter().collect()
}

/// Classes by canonicalizing every one of the `2^C(n,2)` labelled tournaments.
pub fn brute_force_classes(n: usize) -> Vec<CanonicalCode> {
    assert!((2..=6).contains(&n), "brute force is limited to n <= 6");
    let len = n * (n - 1) / 2;
    let mut seen = BTreeSet::new();
    for word in 0u32..1 << len {
        let mut idx = 0;
        let t = Tournament::from_upper(n, |_, _| {
            idx += 1;
            word >> (len - idx) & 1 == 1
        });
        seen.insert(canonical_code(&t));
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_class_code() {
        let c = canonical_code(&Tournament::canonical(4));
        assert_eq!(alloc::format!("{c}"), "4:000000");
        assert_eq!(canonical_code(&Tournament::canonical(4).reversed()), c);
    }

    #[test]
    fn both_three_cycles_agree() {
        let a = Tournament::parse("3:101").unwrap();
        let b = Tournament::parse("3:010").unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&Tournament::canonical(3)));
    }

    #[test]
    fn matches_exhaustive_on_all_five_tournaments() {
        for word in 0u32..1 << 10 {
            let mut idx = 0;
            let t = Tournament::from_upper(5, |_, _| {
                idx += 1;
                word >> (10 - idx) & 1 == 1
            });
            assert_eq!(canonical_code(&t), canonical_code_exhaustive(&t), "{t}");
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_classes(2).unwrap().len(), 1);
        assert_eq!(enumerate_classes(3).unwrap().len(), 2);
        assert_eq!(enumerate_classes(4).unwrap().len(), 4);
        assert_eq!(enumerate_classes(5).unwrap().len(), 12);
        assert_eq!(enumerate_classes(1), Err(RangeError(1)));
        assert_eq!(enumerate_classes(9), Err(RangeError(9)));
    }

    #[test]
    fn augmentation_matches_brute_force() {
        for n in 3..=5 {
            assert_eq!(enumerate_classes(n).unwrap(), brute_force_classes(n));
        }
    }

    #[test]
    fn isomorphism_size_mismatch() {
        assert_eq!(
            are_isomorphic(&Tournament::canonical(3), &Tournament::canonical(4)),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn code_text_round_trip() {
        for c in enumerate_classes(5).unwrap() {
            let text = alloc::format!("{c}");
            let parsed: CanonicalCode = text.parse().unwrap();
            assert_eq!(parsed, c);
            assert_eq!(c.tournament().code(), text);
        }
    }
}
