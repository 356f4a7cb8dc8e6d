//! Invariant metrics, the coefficients of `dΩ`, and the (1,2)-symplectic
//! metric family of a tournament.
//!
//! A Borel-type metric is a positive weight `λ_ij` per unordered pair. With
//! `μ_ij = ε_ij λ_ij`, the Kähler form has
//! `dΩ = 4 Σ_{i<j<k} C_ijk Ψ_ijk` where `C_ijk = μ_ij − μ_ik + μ_jk`.
//! `Ψ_ijk` is of type (3,0)+(0,3) exactly when the triple is a 3-cycle and of
//! type (2,1)+(1,2) otherwise, so the metric is (1,2)-symplectic iff `C_ijk`
//! vanishes on every transitive triple. On cyclic triples `|C_ijk|` is the sum
//! of the three weights and never vanishes.
//!
//! The (1,2)-symplectic metrics of a tournament are therefore the strictly
//! positive points of the kernel of a ±1 linear system with one row per
//! transitive triple. [`solve_family`] computes that kernel exactly and decides
//! strict positivity with an exact LP, returning either an interior sample or
//! a Farkas-type certificate.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Kernel};
use crate::rational::{int, Rational};
use crate::simplex::{self, LpOutcome, StandardLp};
use crate::tournament::{self, Tournament, TripleClass};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("metric on {metric} players used with a {tournament}-player tournament")]
    DimensionMismatch { metric: usize, tournament: usize },
    #[error("expected {expected} pair weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("weight of pair ({i},{j}) must be positive")]
    NonPositive { i: usize, j: usize },
    #[error(transparent)]
    Tournament(#[from] tournament::Error),
}

/// Index of the pair `i < j` (1-based) in encoding order.
pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    let i0 = i - 1;
    i0 * (2 * n - i0 - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)`, `i < j`, in encoding order.
pub fn edges(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Positive weights `λ_ij` on unordered pairs, stored in encoding order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MetricSpec {
    n: usize,
    lambda: Vec<Rational>,
}

impl MetricSpec {
    pub fn new(n: usize, lambda: Vec<Rational>) -> Result<MetricSpec, Error> {
        let expected = n * n.saturating_sub(1) / 2;
        if lambda.len() != expected {
            return Err(Error::WeightCount { expected, got: lambda.len() });
        }
        if let Some(e) = lambda.iter().position(|l| !l.is_positive()) {
            let (i, j) = edges(n)[e];
            return Err(Error::NonPositive { i, j });
        }
        Ok(MetricSpec { n, lambda })
    }

    /// Weights from a function of the 1-based pair `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<MetricSpec, Error> {
        Self::new(n, edges(n).into_iter().map(|(i, j)| f(i, j)).collect())
    }

    /// The normal metric: every weight equal to one.
    pub fn normal(n: usize) -> MetricSpec {
        MetricSpec {
            n,
            lambda: alloc::vec![int(1); n * (n - 1) / 2],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `λ_ij` for `i != j` in either order.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        &self.lambda[edge_index(self.n, a, b)]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.lambda
    }

    pub fn scaled(&self, c: &Rational) -> MetricSpec {
        assert!(c.is_positive());
        MetricSpec {
            n: self.n,
            lambda: self.lambda.iter().map(|l| l * c).collect(),
        }
    }

    /// The same metric scaled to coprime positive integers.
    pub fn integer_weights(&self) -> Vec<BigInt> {
        crate::rational::integer_direction(&self.lambda)
    }

    /// Signed weights `μ_ij = ε_ij λ_ij`.
    pub fn signed(&self, t: &Tournament) -> Result<SignedWeight, Error> {
        check_sizes(t, self)?;
        let mu = edges(self.n)
            .into_iter()
            .zip(&self.lambda)
            .map(|((i, j), l)| if t.beats(i, j) { l.clone() } else { -l.clone() })
            .collect();
        Ok(SignedWeight { n: self.n, mu })
    }
}

impl fmt::Debug for MetricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for ((i, j), l) in edges(self.n).into_iter().zip(&self.lambda) {
            m.entry(&(i, j), &crate::rational::to_text(l));
        }
        m.finish()
    }
}

/// `μ_ij = ε_ij λ_ij` for `i < j`, in encoding order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedWeight {
    n: usize,
    mu: Vec<Rational>,
}

impl SignedWeight {
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.mu[edge_index(self.n, i, j)]
    }

    /// `C_ijk = μ_ij − μ_ik + μ_jk`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Rational {
        self.get(i, j) - self.get(i, k) + self.get(j, k)
    }
}

fn check_sizes(t: &Tournament, m: &MetricSpec) -> Result<(), Error> {
    if t.n() != m.n() {
        return Err(Error::DimensionMismatch {
            metric: m.n(),
            tournament: t.n(),
        });
    }
    Ok(())
}

/// `C_ijk` for `i < j < k`.
pub fn coefficient(t: &Tournament, m: &MetricSpec, i: usize, j: usize, k: usize) -> Result<Rational, Error> {
    check_sizes(t, m)?;
    t.triple_class(i, j, k)?;
    Ok(m.signed(t)?.coefficient(i, j, k))
}

/// Bidegree of `Ψ_ijk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    /// (3,0) ⊕ (0,3)
    ThreeZero,
    /// (2,1) ⊕ (1,2)
    TwoOne,
}

impl Component {
    pub fn label(self) -> &'static str {
        match self {
            Component::ThreeZero => "(3,0)+(0,3)",
            Component::TwoOne => "(2,1)+(1,2)",
        }
    }
}

impl From<TripleClass> for Component {
    fn from(c: TripleClass) -> Self {
        match c {
            TripleClass::Cyclic => Component::ThreeZero,
            TripleClass::Transitive => Component::TwoOne,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleReport {
    pub triple: (usize, usize, usize),
    pub class: TripleClass,
    pub coefficient: Rational,
    pub component: Component,
}

/// One report per triple `i < j < k`, in lexicographic order.
pub fn d_omega_report(t: &Tournament, m: &MetricSpec) -> Result<Vec<TripleReport>, Error> {
    let mu = m.signed(t)?;
    let n = t.n();
    let mut out = Vec::with_capacity(n * n * n / 6);
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let class = t.triple_class0(i - 1, j - 1, k - 1);
                out.push(TripleReport {
                    triple: (i, j, k),
                    class,
                    coefficient: mu.coefficient(i, j, k),
                    component: class.into(),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricClass {
    /// Integrable structure and `dΩ = 0`.
    Kahler,
    /// `(dΩ)^{1,2} = 0` but not Kähler.
    OneTwoSymplectic,
    None,
}

impl MetricClass {
    pub fn label(self) -> &'static str {
        match self {
            MetricClass::Kahler => "kahler",
            MetricClass::OneTwoSymplectic => "one-two-symplectic",
            MetricClass::None => "none",
        }
    }
}

pub fn classify_metric(t: &Tournament, m: &MetricSpec) -> Result<MetricClass, Error> {
    let report = d_omega_report(t, m)?;
    let one_two = report
        .iter()
        .filter(|r| r.class == TripleClass::Transitive)
        .all(|r| r.coefficient.is_zero());
    Ok(if !one_two {
        MetricClass::None
    } else if t.is_transitive() {
        // every triple is transitive, so every coefficient vanishes
        MetricClass::Kahler
    } else {
        MetricClass::OneTwoSymplectic
    })
}

/// Row `ε_ij λ_ij − ε_ik λ_ik + ε_jk λ_jk = 0` of a transitive triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintRow {
    pub triple: (usize, usize, usize),
    /// `(edge index, coefficient)` for the pairs `ij`, `ik`, `jk`.
    pub terms: [(usize, i8); 3],
}

impl ConstraintRow {
    pub fn evaluate(&self, lambda: &[Rational]) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, &(e, c)| if c > 0 { acc + &lambda[e] } else { acc - &lambda[e] })
    }
}

/// The homogeneous system whose positive solutions are the (1,2)-symplectic metrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub n: usize,
    /// Variables: one per pair, in encoding order.
    pub edges: Vec<(usize, usize)>,
    pub rows: Vec<ConstraintRow>,
}

impl ConstraintSystem {
    pub fn dense(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = alloc::vec![0i64; self.edges.len()];
                for &(e, c) in &r.terms {
                    d[e] = c as i64;
                }
                d
            })
            .collect()
    }

    /// `true` iff every row vanishes at `lambda`.
    pub fn is_satisfied_by(&self, lambda: &[Rational]) -> bool {
        lambda.len() == self.edges.len() && self.rows.iter().all(|r| r.evaluate(lambda).is_zero())
    }

    /// `Σ_r y_r row_r` as a vector over the edges.
    pub fn combine(&self, multipliers: &[Rational]) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.edges.len()];
        for (r, y) in self.rows.iter().zip(multipliers) {
            if y.is_zero() {
                continue;
            }
            for &(e, c) in &r.terms {
                if c > 0 {
                    out[e] += y;
                } else {
                    out[e] -= y;
                }
            }
        }
        out
    }
}

/// Rows for the transitive triples in lexicographic order.
pub fn constraint_system(t: &Tournament) -> ConstraintSystem {
    let n = t.n();
    let mut rows = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if t.triple_class0(i - 1, j - 1, k - 1) == TripleClass::Cyclic {
                    continue;
                }
                rows.push(ConstraintRow {
                    triple: (i, j, k),
                    terms: [
                        (edge_index(n, i, j), t.epsilon(i, j)),
                        (edge_index(n, i, k), -t.epsilon(i, k)),
                        (edge_index(n, j, k), t.epsilon(j, k)),
                    ],
                });
            }
        }
    }
    ConstraintSystem { n, edges: edges(n), rows }
}

/// Proof that no strictly positive vector solves the system: multipliers `y`
/// (one per row, any sign, the rows being equations) whose combination
/// `c = Σ y_r row_r` is non-negative and nonzero. For a solution `λ > 0`,
/// `c.λ` would be both `0` and positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub multipliers: Vec<Rational>,
    pub combination: Vec<Rational>,
}

impl FarkasCertificate {
    pub fn verify(&self, sys: &ConstraintSystem) -> bool {
        self.multipliers.len() == sys.rows.len()
            && sys.combine(&self.multipliers) == self.combination
            && linalg::is_nonnegative(&self.combination)
            && self.combination.iter().any(|c| c.is_positive())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Positivity {
    /// `sample` is the max-min point with weights summing to one; `margin` is
    /// its smallest weight.
    FeasibleInterior { sample: MetricSpec, margin: Rational },
    Infeasible(FarkasCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub n: usize,
    pub dimension: usize,
    /// Edge indices of the free variables of the reduced system; `basis[f]` is
    /// 1 on `free_edges[f]` and 0 on the other free edges.
    pub free_edges: Vec<usize>,
    pub basis: Vec<Vec<Rational>>,
    pub positivity: Positivity,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolutionDefect {
    #[error("basis vector {0} violates a constraint row")]
    BasisOffKernel(usize),
    #[error("basis has rank {rank}, expected {dimension}")]
    BasisRank { rank: usize, dimension: usize },
    #[error("interior sample violates a constraint row")]
    SampleOffKernel,
    #[error("interior sample is not strictly positive")]
    SampleNotPositive,
    #[error("Farkas certificate does not verify")]
    BadCertificate,
}

impl SolutionSpace {
    pub fn admits(&self) -> bool {
        matches!(self.positivity, Positivity::FeasibleInterior { .. })
    }

    pub fn sample(&self) -> Option<&MetricSpec> {
        match &self.positivity {
            Positivity::FeasibleInterior { sample, .. } => Some(sample),
            Positivity::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&FarkasCertificate> {
        match &self.positivity {
            Positivity::FeasibleInterior { .. } => None,
            Positivity::Infeasible(c) => Some(c),
        }
    }

    /// Substitutes the basis, sample and certificate back into `sys`.
    pub fn verify(&self, sys: &ConstraintSystem) -> Result<(), SolutionDefect> {
        for (b, v) in self.basis.iter().enumerate() {
            if !sys.is_satisfied_by(v) {
                return Err(SolutionDefect::BasisOffKernel(b));
            }
        }
        let rank = linalg::rank(&self.basis);
        if rank != self.dimension {
            return Err(SolutionDefect::BasisRank {
                rank,
                dimension: self.dimension,
            });
        }
        match &self.positivity {
            Positivity::FeasibleInterior { sample, .. } => {
                if !sys.is_satisfied_by(sample.weights()) {
                    return Err(SolutionDefect::SampleOffKernel);
                }
                if !sample.weights().iter().all(|l| l.is_positive()) {
                    return Err(SolutionDefect::SampleNotPositive);
                }
            }
            Positivity::Infeasible(cert) => {
                if !cert.verify(sys) {
                    return Err(SolutionDefect::BadCertificate);
                }
            }
        }
        Ok(())
    }
}

/// Kernel, dimension and strict-positivity verdict of the (1,2)-symplectic
/// system of `t`. The result is checked by substitution before returning.
///
/// A tournament with a forbidden 4-subtournament gets the certificate of that
/// 4-player subsystem, lifted by zero multipliers. Otherwise exactly one of
/// two LPs is solvable (Stiemke's alternative); the certificate LP runs first.
pub fn solve_family(t: &Tournament) -> SolutionSpace {
    solve(t, true)
}

/// [`solve_family`] deciding positivity by the LPs on the full system only.
pub fn solve_family_full_lp(t: &Tournament) -> SolutionSpace {
    solve(t, false)
}

fn solve(t: &Tournament, local_first: bool) -> SolutionSpace {
    let sys = constraint_system(t);
    let kernel = linalg::kernel(&sys.dense(), sys.edges.len());
    let local = if local_first { local_certificate(t, &sys) } else { None };
    let positivity = match local.or_else(|| farkas_over(&sys, &kernel.independent_rows)) {
        Some(cert) => Positivity::Infeasible(cert),
        None => {
            let (lambda, margin) =
                max_min_point(&kernel, sys.edges.len()).expect("no certificate implies a strictly positive solution");
            Positivity::FeasibleInterior {
                sample: MetricSpec::new(t.n(), lambda).expect("interior point is positive"),
                margin,
            }
        }
    };
    let space = SolutionSpace {
        n: t.n(),
        dimension: kernel.dimension(),
        free_edges: kernel.free.clone(),
        basis: kernel.basis,
        positivity,
    };
    if let Err(defect) = space.verify(&sys) {
        panic!("solver produced an invalid solution for {t}: {defect}");
    }
    space
}

/// Certificate of a forbidden 4-subtournament's own rows, as multipliers on `sys`.
/// Rows of a subtournament only involve its own edges, so the combination is
/// the local one padded with zeros.
fn local_certificate(t: &Tournament, sys: &ConstraintSystem) -> Option<FarkasCertificate> {
    if t.n() < 4 {
        return None;
    }
    let q = t.four_subtournament_profile().ok()?.witness?;
    let sub_sys = constraint_system(&t.subtournament(&q).ok()?);
    let local = farkas_certificate(&sub_sys)?;
    let mut multipliers = alloc::vec![Rational::zero(); sys.rows.len()];
    for (row, y) in sub_sys.rows.iter().zip(&local.multipliers) {
        let (a, b, c) = row.triple;
        let target = (q[a - 1], q[b - 1], q[c - 1]);
        let idx = sys.rows.iter().position(|r| r.triple == target)?;
        multipliers[idx] = y.clone();
    }
    let combination = sys.combine(&multipliers);
    Some(FarkasCertificate {
        multipliers,
        combination,
    })
}

/// Largest smallest weight over solutions with weights summing to one, or
/// `None` when that is not positive.
pub fn max_min_margin(sys: &ConstraintSystem) -> Option<Rational> {
    let kernel = linalg::kernel(&sys.dense(), sys.edges.len());
    max_min_point(&kernel, sys.edges.len()).map(|(_, m)| m)
}

/// Maximizes the smallest weight over kernel points with weights summing to
/// one. Writing `λ = m·1 + s` with `s >= 0`, this is
/// `max m` s.t. `R(m·1 + s) = 0`, `E·m + Σ s = 1`, `m, s >= 0`, with `R` the
/// reduced rows and `E` the number of edges. Returns the optimal point when the
/// optimum is positive.
fn max_min_point(kernel: &Kernel, edges: usize) -> Option<(Vec<Rational>, Rational)> {
    let mut a = Vec::with_capacity(kernel.rref.len() + 1);
    let mut b = Vec::with_capacity(kernel.rref.len() + 1);
    for row in &kernel.rref {
        let mut r = Vec::with_capacity(edges + 1);
        r.push(row.iter().sum());
        r.extend(row.iter().cloned());
        a.push(r);
        b.push(Rational::zero());
    }
    let mut norm = alloc::vec![int(edges as i64)];
    norm.extend((0..edges).map(|_| Rational::one()));
    a.push(norm);
    b.push(Rational::one());
    let mut c = alloc::vec![Rational::zero(); edges + 1];
    c[0] = Rational::one();
    match simplex::solve(&StandardLp { a, b, c }) {
        LpOutcome::Optimal { x, value } if value.is_positive() => {
            let lambda = x[1..].iter().map(|s| s + &value).collect();
            Some((lambda, value))
        }
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("the margin is bounded by the normalization"),
    }
}

/// Finds multipliers `y` with `Σ y_r row_r = c >= 0`, `Σ c = 1`. By Stiemke's
/// alternative such `y` exists iff the system has no strictly positive
/// solution.
pub fn farkas_certificate(sys: &ConstraintSystem) -> Option<FarkasCertificate> {
    let kernel = linalg::kernel(&sys.dense(), sys.edges.len());
    farkas_over(sys, &kernel.independent_rows)
}

/// As [`farkas_certificate`], with multipliers only on the rows `support`
/// (which must span the row space); the others get zero.
fn farkas_over(sys: &ConstraintSystem, support: &[usize]) -> Option<FarkasCertificate> {
    let rows = support.len();
    let e = sys.edges.len();
    // variables: y+ (rows), y- (rows), c (e)
    let vars = 2 * rows + e;
    let mut a = alloc::vec![alloc::vec![Rational::zero(); vars]; e + 1];
    for (r, &orig) in support.iter().enumerate() {
        for &(edge, coef) in &sys.rows[orig].terms {
            a[edge][r] = int(coef as i64);
            a[edge][rows + r] = int(-(coef as i64));
        }
    }
    for edge in 0..e {
        a[edge][2 * rows + edge] = int(-1);
        a[e][2 * rows + edge] = Rational::one();
    }
    let mut b = alloc::vec![Rational::zero(); e + 1];
    b[e] = Rational::one();
    match simplex::solve(&StandardLp {
        a,
        b,
        c: alloc::vec![Rational::zero(); vars],
    }) {
        LpOutcome::Optimal { x, .. } => {
            let mut multipliers = alloc::vec![Rational::zero(); sys.rows.len()];
            for (r, &orig) in support.iter().enumerate() {
                multipliers[orig] = &x[r] - &x[rows + r];
            }
            let combination = x[2 * rows..].to_vec();
            Some(FarkasCertificate {
                multipliers,
                combination,
            })
        }
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("feasibility problem has a zero objective"),
    }
}
