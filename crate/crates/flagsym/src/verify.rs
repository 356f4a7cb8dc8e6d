//! Batch checks behind `flagsym verify`.

use flagsym_core::families::{default_samples, verify_family_with, FamilyParams};
use flagsym_core::isoclass::MAX_CANONICAL;
use flagsym_core::rational::frac;
use flagsym_core::survey::{normal_metric_survey, MAX_CENSUS};
use flagsym_core::symplectic::constraint_system;
use flagsym_core::{family_tournament, solve_family};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    #[value(name = "theorem-2.2")]
    #[serde(rename = "theorem-2.2")]
    Theorem22,
    #[value(name = "theorem-3.1")]
    #[serde(rename = "theorem-3.1")]
    Theorem31,
    WolfGray,
    #[value(name = "families-4sub")]
    #[serde(rename = "families-4sub")]
    Families4sub,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Theorem22 => "theorem-2.2",
            Target::Theorem31 => "theorem-3.1",
            Target::WolfGray => "wolf-gray",
            Target::Families4sub => "families-4sub",
        }
    }

    /// Inclusive range of accepted `--n-max` values.
    pub fn n_range(self) -> (usize, usize) {
        match self {
            Target::Theorem22 => (4, MAX_CENSUS),
            Target::Theorem31 => (4, MAX_CANONICAL),
            Target::WolfGray => (3, 7),
            Target::Families4sub => (4, MAX_CANONICAL),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub target: Target,
    pub n_max: usize,
    /// Number of individual objects checked (classes, families or sizes).
    pub checked: usize,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("--n-max for {target} must be in {min}..={max}, got {got}")]
pub struct NMaxError {
    pub target: &'static str,
    pub min: usize,
    pub max: usize,
    pub got: usize,
}

pub fn run(target: Target, n_max: usize, seed: u64, jobs: Option<usize>) -> Result<VerifyReport, NMaxError> {
    let (min, max) = target.n_range();
    if !(min..=max).contains(&n_max) {
        return Err(NMaxError { target: target.name(), min, max, got: n_max });
    }
    let mut report = VerifyReport { target, n_max, checked: 0, violations: Vec::new() };
    match target {
        Target::Theorem22 => forbidden_classes_infeasible(&mut report, jobs),
        Target::Theorem31 => families_solve(&mut report, seed),
        Target::WolfGray => normal_metric(&mut report),
        Target::Families4sub => families_structure(&mut report),
    }
    Ok(report)
}

fn family_grid(n_max: usize) -> impl Iterator<Item = (usize, usize)> {
    (4..=n_max).flat_map(|n| (1..=n - 3).map(move |k| (n, k)))
}

fn forbidden_classes_infeasible(report: &mut VerifyReport, jobs: Option<usize>) {
    for n in 4..=report.n_max {
        let records = parallel::census(n, jobs).expect("range checked");
        for r in records.iter().filter(|r| r.forbidden4) {
            report.checked += 1;
            let t = r.code.tournament();
            let space = solve_family(&t);
            match space.certificate() {
                Some(cert) if cert.verify(&constraint_system(&t)) => {}
                Some(_) => report.violations.push(format!("{}: certificate does not verify", r.code)),
                None => report.violations.push(format!("{}: forbidden 4-subtournament yet feasible", r.code)),
            }
        }
    }
}

fn families_solve(report: &mut VerifyReport, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (n, k) in family_grid(report.n_max) {
        report.checked += 1;
        let mut samples = default_samples(n, k);
        for _ in 0..2 {
            let free = (0..n).map(|_| frac(rng.gen_range(1..=60), rng.gen_range(1..=12))).collect();
            samples.push(FamilyParams::new(n, k, free).expect("positive parameters"));
        }
        let r = verify_family_with(n, k, &samples).expect("grid is in range");
        report.violations.extend(r.failures.into_iter().map(|f| format!("({n},{k}): {f}")));
    }
}

fn normal_metric(report: &mut VerifyReport) {
    for n in 3..=report.n_max {
        report.checked += 1;
        let r = normal_metric_survey(n).expect("range checked");
        let expected = usize::from(n == 3);
        if r.accepting.len() != expected {
            report
                .violations
                .push(format!("n={n}: {} classes accept the normal metric, expected {expected}", r.accepting.len()));
        }
        for (code, _) in &r.accepting {
            if code.tournament().three_cycle_count() != 1 {
                report.violations.push(format!("n={n}: {code} accepts the normal metric"));
            }
        }
    }
}

fn families_structure(report: &mut VerifyReport) {
    for (n, k) in family_grid(report.n_max) {
        report.checked += 1;
        let t = family_tournament(n, k).expect("grid is in range");
        let profile = t.four_subtournament_profile().expect("n >= 4");
        if let Some(w) = profile.witness {
            report.violations.push(format!("({n},{k}): forbidden 4-subtournament on {w:?}"));
        }
        if !t.is_hamiltonian() {
            report.violations.push(format!("({n},{k}): not Hamiltonian"));
        }
    }
}
