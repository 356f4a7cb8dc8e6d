//! The `n`-parameter families of (1,2)-symplectic metrics on the tournaments
//! `T(n, k)`, `1 <= k <= n - 3`.
//!
//! `T(n, k)` is the canonical tournament with the arcs `(i, n)`, `i <= k`,
//! reversed. Its cyclic triples are exactly `(i, j, n)` with
//! `i <= k < j < n`. The free parameters are the consecutive weights
//! `λ_12, .., λ_(n-1)n` followed by `λ_1n`; every other weight is a chain sum
//! `λ_ij = λ_i(i+1) + .. + λ_(j-1)j`, except
//! `λ_in = λ_12 + .. + λ_(i-1)i + λ_1n` for `2 <= i <= k`.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::isoclass::canonical_code;
use crate::linalg;
use crate::rational::{int, Rational};
use crate::symplectic::{self, constraint_system, edge_index, edges, MetricClass, MetricSpec};
use crate::tournament::{Tournament, TripleClass, MAX_PLAYERS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("family index k = {k} is outside 1..={max} for n = {n}")]
    KOutOfRange { n: usize, k: usize, max: usize },
    #[error("families need 4 <= n <= {MAX_PLAYERS}, got {0}")]
    NOutOfRange(usize),
    #[error("expected {expected} free parameters, got {got}")]
    ParamCount { expected: usize, got: usize },
    #[error("free parameter {index} must be positive")]
    NonPositive { index: usize },
}

fn check_range(n: usize, k: usize) -> Result<(), FamilyError> {
    if !(4..=MAX_PLAYERS).contains(&n) {
        return Err(FamilyError::NOutOfRange(n));
    }
    if k < 1 || k > n - 3 {
        return Err(FamilyError::KOutOfRange { n, k, max: n - 3 });
    }
    Ok(())
}

/// Positive values of `(λ_12, λ_23, .., λ_(n-1)n, λ_1n)` for the family `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    n: usize,
    k: usize,
    free: Vec<Rational>,
}

impl FamilyParams {
    pub fn new(n: usize, k: usize, free: Vec<Rational>) -> Result<FamilyParams, FamilyError> {
        check_range(n, k)?;
        if free.len() != n {
            return Err(FamilyError::ParamCount {
                expected: n,
                got: free.len(),
            });
        }
        if let Some(index) = free.iter().position(|p| !p.is_positive()) {
            return Err(FamilyError::NonPositive { index });
        }
        Ok(FamilyParams { n, k, free })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn free(&self) -> &[Rational] {
        &self.free
    }
}

/// Names of the free parameters: `l1_2, l2_3, .., l(n-1)_n, l1_n`.
pub fn param_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..n).map(|i| alloc::format!("l{}_{}", i, i + 1)).collect();
    names.push(alloc::format!("l1_{n}"));
    names
}

pub fn family_tournament(n: usize, k: usize) -> Result<Tournament, FamilyError> {
    check_range(n, k)?;
    Ok(Tournament::from_upper(n, |i, j| !(j == n - 1 && i < k)))
}

/// Indices into the free parameters whose sum is `λ_ij`, `i < j`.
pub fn weight_terms(n: usize, k: usize, i: usize, j: usize) -> Vec<usize> {
    if j == n && i <= k {
        let mut terms: Vec<usize> = (0..i - 1).collect();
        terms.push(n - 1);
        terms
    } else {
        (i - 1..j - 1).collect()
    }
}

/// The family weights as a linear function of arbitrary parameter values.
pub fn family_weights(n: usize, k: usize, free: &[Rational]) -> Vec<Rational> {
    assert_eq!(free.len(), n);
    edges(n)
        .into_iter()
        .map(|(i, j)| weight_terms(n, k, i, j).into_iter().map(|p| &free[p]).sum())
        .collect()
}

pub fn family_metric(p: &FamilyParams) -> MetricSpec {
    MetricSpec::new(p.n, family_weights(p.n, p.k, &p.free)).expect("chain sums of positive parameters are positive")
}

/// The symmetric weight matrix with zero diagonal, entries as parameter index lists.
pub fn symbolic_matrix(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| match i.cmp(&j) {
                    core::cmp::Ordering::Equal => Vec::new(),
                    core::cmp::Ordering::Less => weight_terms(n, k, i, j),
                    core::cmp::Ordering::Greater => weight_terms(n, k, j, i),
                })
                .collect()
        })
        .collect()
}

/// The weight matrix of a concrete metric.
pub fn weight_matrix(m: &MetricSpec) -> Vec<Vec<Rational>> {
    let n = m.n();
    (1..=n)
        .map(|i| (1..=n).map(|j| if i == j { Rational::zero() } else { m.get(i, j).clone() }).collect())
        .collect()
}

/// Outcome of [`verify_family`]; `failures` is empty when every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub n: usize,
    pub k: usize,
    pub code: String,
    pub dimension: usize,
    pub admits: bool,
    pub samples_checked: usize,
    /// Closed-form span equals the solver kernel.
    pub span_matches: bool,
    /// Cyclic triples are exactly `(i, j, n)`, `i <= k < j < n`.
    pub cyclic_triples_match: bool,
    /// Distinct `k` give non-isomorphic tournaments at this `n` (checked for `n >= 5`).
    pub pairwise_non_isomorphic: Option<bool>,
    /// The published score formula assumes `n >= 2k + 1`.
    pub score_formula_applies: bool,
    pub failures: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Deterministic positive parameter vectors used by [`verify_family`].
pub fn default_samples(n: usize, k: usize) -> Vec<FamilyParams> {
    let ones = alloc::vec![int(1); n];
    let ramp = (1..=n as i64).map(int).collect();
    let mixed = (0..n as i64).map(|i| crate::rational::frac(7 * i % 11 + 1, (i % 3) + 2)).collect();
    [ones, ramp, mixed]
        .into_iter()
        .map(|free| FamilyParams::new(n, k, free).expect("positive sample"))
        .collect()
}

/// Checks the family `(n, k)` against the solver with the default samples.
pub fn verify_family(n: usize, k: usize) -> Result<FamilyReport, FamilyError> {
    verify_family_with(n, k, &default_samples(n, k))
}

/// Checks the family `(n, k)`:
/// every sample metric is (1,2)-symplectic, the kernel has dimension `n`, the
/// closed form spans exactly the kernel, the cyclic triples are the expected
/// ones, and for `n >= 5` the family tournaments for distinct `k` are pairwise
/// non-isomorphic.
pub fn verify_family_with(n: usize, k: usize, samples: &[FamilyParams]) -> Result<FamilyReport, FamilyError> {
    let t = family_tournament(n, k)?;
    let mut failures = Vec::new();

    for p in samples {
        if (p.n, p.k) != (n, k) {
            return Err(FamilyError::KOutOfRange { n, k: p.k, max: n - 3 });
        }
        let m = family_metric(p);
        let class = symplectic::classify_metric(&t, &m).expect("sizes agree");
        if class != MetricClass::OneTwoSymplectic {
            let bad = symplectic::d_omega_report(&t, &m)
                .expect("sizes agree")
                .into_iter()
                .find(|r| r.class == TripleClass::Transitive && !r.coefficient.is_zero());
            failures.push(alloc::format!(
                "sample {:?} classified {}; first nonzero transitive triple {:?}",
                p.free.iter().map(crate::rational::to_text).collect::<Vec<_>>(),
                class.label(),
                bad.map(|r| r.triple)
            ));
        }
    }

    let space = symplectic::solve_family(&t);
    if space.dimension != n {
        failures.push(alloc::format!("kernel dimension {} != {n}", space.dimension));
    }
    if !space.admits() {
        failures.push(String::from("no strictly positive solution"));
    }

    // closed form inside the kernel, full rank n, and every kernel basis vector
    // reproduced by the closed form evaluated at its own free coordinates
    let sys = constraint_system(&t);
    let directions: Vec<Vec<Rational>> = (0..n)
        .map(|p| {
            let mut unit = alloc::vec![Rational::zero(); n];
            unit[p] = int(1);
            family_weights(n, k, &unit)
        })
        .collect();
    let mut span_matches = true;
    for (p, d) in directions.iter().enumerate() {
        if let Some(row) = sys.rows.iter().find(|r| !r.evaluate(d).is_zero()) {
            failures.push(alloc::format!("direction {p} violates triple {:?}", row.triple));
            span_matches = false;
        }
    }
    if linalg::rank(&directions) != n {
        failures.push(String::from("closed-form directions are linearly dependent"));
        span_matches = false;
    }
    for (b, v) in space.basis.iter().enumerate() {
        let mut coords: Vec<Rational> = (1..n).map(|i| v[edge_index(n, i, i + 1)].clone()).collect();
        coords.push(v[edge_index(n, 1, n)].clone());
        if family_weights(n, k, &coords) != *v {
            failures.push(alloc::format!("kernel basis vector {b} is not of closed form"));
            span_matches = false;
        }
    }

    let mut cyclic_triples_match = true;
    for i in 1..=n {
        for j in i + 1..=n {
            for l in j + 1..=n {
                let expected = l == n && i <= k && k < j && j < n;
                let cyclic = t.triple_class(i, j, l).expect("valid triple") == TripleClass::Cyclic;
                if cyclic != expected {
                    failures.push(alloc::format!("triple ({i},{j},{l}) cyclic = {cyclic}, expected {expected}"));
                    cyclic_triples_match = false;
                }
            }
        }
    }

    let pairwise_non_isomorphic = (n >= 5).then(|| {
        let mine = canonical_code(&t);
        let distinct = (1..=n - 3)
            .filter(|&other| other != k)
            .all(|other| canonical_code(&family_tournament(n, other).expect("valid k")) != mine);
        if !distinct {
            failures.push(String::from("isomorphic to another family tournament at the same n"));
        }
        distinct
    });

    Ok(FamilyReport {
        n,
        k,
        code: t.code(),
        dimension: space.dimension,
        admits: space.admits(),
        samples_checked: samples.len(),
        span_matches,
        cyclic_triples_match,
        pairwise_non_isomorphic,
        score_formula_applies: n > 2 * k,
        failures,
    })
}
