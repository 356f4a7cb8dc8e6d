//! Census of all isomorphism classes of `n`-tournaments with their
//! (1,2)-symplectic verdicts, and the experiments built on it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::families::family_tournament;
use crate::isoclass::{self, canonical_code, CanonicalCode};
use crate::symplectic::{classify_metric, solve_family, MetricClass, MetricSpec};

/// Largest `n` for a census.
pub const MAX_CENSUS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{what} supports {min} <= n <= {max}, got {n}")]
pub struct RangeError {
    pub what: &'static str,
    pub n: usize,
    pub min: usize,
    pub max: usize,
}

fn check(what: &'static str, n: usize, min: usize, max: usize) -> Result<(), RangeError> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(RangeError { what, n, min, max })
    }
}

/// One census row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub code: CanonicalCode,
    /// Sorted score vector.
    pub score: Vec<usize>,
    pub integrable: bool,
    pub parabolic: bool,
    pub hamiltonian: bool,
    pub forbidden4: bool,
    pub witness: Option<[usize; 4]>,
    pub admits12s: bool,
    /// Kernel dimension, reported whether or not a positive metric exists.
    pub dimension: usize,
    /// `(n, k)` when the class is that of a family tournament.
    pub family: Option<(usize, usize)>,
}

/// Canonical codes of the family tournaments on `n` players.
#[derive(Debug, Clone, Default)]
pub struct FamilyIndex(BTreeMap<CanonicalCode, (usize, usize)>);

impl FamilyIndex {
    pub fn for_n(n: usize) -> FamilyIndex {
        let mut map = BTreeMap::new();
        if n >= 4 {
            for k in 1..=n - 3 {
                let t = family_tournament(n, k).expect("k in range");
                map.insert(canonical_code(&t), (n, k));
            }
        }
        FamilyIndex(map)
    }

    pub fn lookup(&self, code: &CanonicalCode) -> Option<(usize, usize)> {
        self.0.get(code).copied()
    }
}

/// Computes every field of the record for one class.
pub fn census_record(code: CanonicalCode, families: &FamilyIndex) -> CensusRecord {
    let t = code.tournament();
    let (forbidden4, witness) = if t.n() >= 4 {
        let profile = t.four_subtournament_profile().expect("n >= 4");
        (profile.has_forbidden(), profile.witness)
    } else {
        (false, None)
    };
    let space = solve_family(&t);
    CensusRecord {
        code,
        score: t.score_vector().sorted(),
        integrable: t.is_transitive(),
        parabolic: t.is_parabolic(),
        hamiltonian: t.is_hamiltonian(),
        forbidden4,
        witness,
        admits12s: space.admits(),
        dimension: space.dimension,
        family: families.lookup(&code),
    }
}

/// One record per isomorphism class, in canonical-code order.
pub fn census(n: usize) -> Result<Vec<CensusRecord>, RangeError> {
    check("census", n, 3, MAX_CENSUS)?;
    let families = FamilyIndex::for_n(n);
    let classes = isoclass::enumerate_classes(n).expect("range checked");
    Ok(classes.into_iter().map(|c| census_record(c, &families)).collect())
}

/// Violations of the hard record invariants, as `(code, message)`.
pub fn record_invariant_violations(records: &[CensusRecord]) -> Vec<(CanonicalCode, &'static str)> {
    let mut bad = Vec::new();
    for r in records {
        let n = r.code.n();
        let transitive_scores = r.score.iter().enumerate().all(|(i, &s)| i == s);
        if r.forbidden4 && r.admits12s {
            bad.push((r.code, "forbidden 4-subtournament but admits a (1,2)-symplectic metric"));
        }
        if r.integrable != transitive_scores {
            bad.push((r.code, "integrable flag disagrees with the score vector"));
        }
        if r.integrable && !(r.admits12s && r.dimension == n - 1) {
            bad.push((r.code, "integrable class without an (n-1)-dimensional Kahler family"));
        }
        if !r.integrable && r.admits12s && r.dimension == n - 1 {
            bad.push((r.code, "non-integrable class with an (n-1)-dimensional family"));
        }
    }
    bad
}

/// Comparison of "admits a (1,2)-symplectic metric" with "no forbidden 4-subtournament".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture1Report {
    pub n: usize,
    pub classes: usize,
    /// Classes where both sides of the equivalence agree.
    pub agreements: usize,
    /// Forbidden 4-subtournament yet admitting; must be empty.
    pub forbidden_but_admitting: Vec<CanonicalCode>,
    /// No forbidden 4-subtournament yet no metric; evidence against the conjecture.
    pub clean_but_not_admitting: Vec<CanonicalCode>,
}

impl Conjecture1Report {
    pub fn equivalence_holds(&self) -> bool {
        self.agreements == self.classes
    }

    pub fn from_records(n: usize, records: &[CensusRecord]) -> Conjecture1Report {
        let mut report = Conjecture1Report {
            n,
            classes: records.len(),
            agreements: 0,
            forbidden_but_admitting: Vec::new(),
            clean_but_not_admitting: Vec::new(),
        };
        for r in records {
            match (r.forbidden4, r.admits12s) {
                (true, true) => report.forbidden_but_admitting.push(r.code),
                (false, false) => report.clean_but_not_admitting.push(r.code),
                _ => report.agreements += 1,
            }
        }
        report
    }
}

pub fn verify_conjecture1(n: usize) -> Result<Conjecture1Report, RangeError> {
    check("conjecture 1 experiment", n, 4, MAX_CENSUS)?;
    Ok(Conjecture1Report::from_records(n, &census(n)?))
}

/// Dimensions of the admitting non-integrable classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture2Report {
    pub n: usize,
    pub admitting_non_integrable: usize,
    /// Classes whose family dimension differs from `n`.
    pub counterexamples: Vec<(CanonicalCode, usize)>,
}

impl Conjecture2Report {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn from_records(n: usize, records: &[CensusRecord]) -> Conjecture2Report {
        let admitting: Vec<&CensusRecord> = records.iter().filter(|r| r.admits12s && !r.integrable).collect();
        Conjecture2Report {
            n,
            admitting_non_integrable: admitting.len(),
            counterexamples: admitting.iter().filter(|r| r.dimension != n).map(|r| (r.code, r.dimension)).collect(),
        }
    }
}

pub fn verify_conjecture2(n: usize) -> Result<Conjecture2Report, RangeError> {
    check("conjecture 2 experiment", n, 3, MAX_CENSUS)?;
    Ok(Conjecture2Report::from_records(n, &census(n)?))
}

/// Which classes accept the normal metric (all weights equal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalReport {
    pub n: usize,
    pub classes: usize,
    pub accepting: Vec<(CanonicalCode, MetricClass)>,
}

pub fn normal_metric_survey(n: usize) -> Result<NormalReport, RangeError> {
    check("normal metric survey", n, 3, 7)?;
    let classes = isoclass::enumerate_classes(n).expect("range checked");
    let normal = MetricSpec::normal(n);
    let accepting = classes
        .iter()
        .filter_map(|c| {
            let class = classify_metric(&c.tournament(), &normal).expect("sizes agree");
            (class != MetricClass::None).then_some((*c, class))
        })
        .collect();
    Ok(NormalReport {
        n,
        classes: classes.len(),
        accepting,
    })
}
