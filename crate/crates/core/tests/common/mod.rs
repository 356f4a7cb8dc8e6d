#![allow(dead_code)]

use flagsym_core::Tournament;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every labelled tournament on `n` players.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
    let len = n * (n - 1) / 2;
    (0u32..1 << len).map(move |word| {
        let mut idx = 0;
        Tournament::from_fn(n, |_, _| {
            idx += 1;
            word >> (len - idx) & 1 == 1
        })
        .unwrap()
    })
}

pub fn random_tournament(n: usize, rng: &mut impl Rng) -> Tournament {
    Tournament::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap()
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    p
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn odd_partitions(n: u64, max: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if n == 0 {
        out.push(acc.clone());
        return;
    }
    let mut part = max.min(n);
    if part.is_multiple_of(2) {
        part -= 1;
    }
    while part >= 1 {
        acc.push(part);
        odd_partitions(n - part, part, acc, out);
        acc.pop();
        if part < 2 {
            break;
        }
        part -= 2;
    }
}

/// Number of isomorphism classes of `n`-tournaments by Burnside's lemma.
///
/// A relabeling fixes some tournament only if all its cycles are odd; it then
/// fixes `2^e` tournaments where `e = Σ (c_i - 1)/2 + Σ_{i<j} gcd(c_i, c_j)`
/// counts the orbits of the relabeling on unordered pairs.
pub fn burnside_class_count(n: u64) -> u64 {
    let mut parts = Vec::new();
    odd_partitions(n, n, &mut Vec::new(), &mut parts);
    let factorial = |k: u64| (1..=k).product::<u64>();
    let mut total: u128 = 0;
    for cycles in parts {
        let mut centralizer: u64 = cycles.iter().product();
        let mut i = 0;
        while i < cycles.len() {
            let j = cycles[i..].iter().take_while(|&&c| c == cycles[i]).count();
            centralizer *= factorial(j as u64);
            i += j;
        }
        let perms = factorial(n) / centralizer;
        let mut e: u64 = cycles.iter().map(|c| (c - 1) / 2).sum();
        for a in 0..cycles.len() {
            for b in a + 1..cycles.len() {
                e += gcd(cycles[a], cycles[b]);
            }
        }
        total += perms as u128 * (1u128 << e);
    }
    (total / factorial(n) as u128) as u64
}
