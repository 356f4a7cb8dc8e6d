//! Argument grammar and dispatch for the `flagsym` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use flagsym_core::families::{default_samples, verify_family_with};
use flagsym_core::rational;
use flagsym_core::survey::{normal_metric_survey, CensusRecord, Conjecture1Report, Conjecture2Report};
use flagsym_core::symplectic::{constraint_system, MetricSpec};
use flagsym_core::{
    family_metric, family_tournament, solve_family, FamilyParams, Rational, Tournament,
};
use serde::Serialize;

use crate::census_file::{self, CensusRow};
use crate::parallel;
use crate::render::{
    numeric_entries, symbolic_entries, text, ClassifyView, Conjecture1View, Conjecture2View, FamilyView, NormalView,
    SolveView,
};
use crate::verify::{self, Target};

/// Environment variable naming the default directory for census files.
pub const CACHE_DIR_VAR: &str = "FLAGSYM_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "flagsym", version, about = "Invariant (1,2)-symplectic metrics on full flag manifolds via tournaments")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for census work (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural flags, scores and triple inventory of a tournament.
    Classify {
        #[arg(long, value_name = "CODE")]
        tournament: Tournament,
        /// Also classify this metric: weights λ_ij for i < j in row order.
        #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
        metric: Option<Vec<Rational>>,
    },
    /// Kernel, dimension and positivity verdict of the (1,2)-symplectic system.
    Solve {
        #[arg(long, value_name = "CODE")]
        tournament: Tournament,
    },
    /// The family tournament T(n,k) and its metric parametrization.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Free parameters l1_2, .., l(n-1)_n, l1_n.
        #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
        params: Option<Vec<Rational>>,
        /// Include the weight matrix.
        #[arg(long)]
        emit_matrix: bool,
        /// Emit matrix entries as sums of parameter names.
        #[arg(long)]
        symbolic: bool,
    },
    /// Census of all isomorphism classes on n players.
    Census {
        #[arg(long)]
        n: usize,
        /// JSONL output file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Batch verification of a classification result.
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        n_max: usize,
    },
    /// Census-backed experiment on one of the two conjectures.
    Conjecture {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        n: usize,
    },
    /// Which classes accept the normal metric.
    Normal {
        #[arg(long)]
        n: usize,
    },
}

fn parse_rational(s: &str) -> Result<Rational, rational::RationalParseError> {
    rational::parse(s)
}

enum Failure {
    Usage(String),
    Runtime(String),
}

type Outcome = Result<i32, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// Parses `args` (including the program name), runs the command and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return e.exit_code();
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_VERIFICATION
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let fmt = cli.format;
    let jobs = cli.jobs.map(usize::from);
    match &cli.command {
        Command::Classify { tournament, metric } => classify(fmt, tournament, metric.as_deref(), out),
        Command::Solve { tournament } => solve(fmt, tournament, out),
        Command::Family { n, k, params, emit_matrix, symbolic } => {
            family(fmt, *n, *k, params.as_deref(), *emit_matrix, *symbolic, out)
        }
        Command::Census { n, out: path } => census(fmt, *n, path.clone(), jobs, out),
        Command::Verify { target, n_max } => verify_cmd(fmt, *target, *n_max, cli.seed, jobs, out),
        Command::Conjecture { which, n } => conjecture(fmt, *which, *n, jobs, out),
        Command::Normal { n } => normal(fmt, *n, out),
    }
}

fn io(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

fn json(out: &mut dyn Write, v: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(io)?;
    writeln!(out).map_err(io)
}

fn csv_table(out: &mut dyn Write, header: &[String], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    w.flush().map_err(io)
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn joined<T: ToString>(v: &[T]) -> String {
    strings(v).join(" ")
}

fn classify(fmt: Format, t: &Tournament, metric: Option<&[Rational]>, out: &mut dyn Write) -> Outcome {
    let metric = metric.map(|w| MetricSpec::new(t.n(), w.to_vec()).map_err(usage)).transpose()?;
    let v = ClassifyView::new(t, metric.as_ref());
    match fmt {
        Format::Json => json(out, &v)?,
        Format::Csv => {
            let header = strings(&["i", "j", "k", "class", "coefficient", "component"]);
            let rows: Vec<Vec<String>> = v
                .triples
                .iter()
                .enumerate()
                .map(|(idx, tr)| {
                    let mut row = strings(&tr.triple);
                    row.push(tr.class.to_string());
                    match &v.metric {
                        Some(m) => {
                            row.push(m.triples[idx].coefficient.clone());
                            row.push(m.triples[idx].component.to_string());
                        }
                        None => row.extend([String::new(), String::new()]),
                    }
                    row
                })
                .collect();
            csv_table(out, &header, &rows)?;
        }
        Format::Text => {
            let w = &mut *out;
            (|| -> std::io::Result<()> {
                writeln!(w, "tournament   {}", v.code)?;
                writeln!(w, "canonical    {}", v.canonical)?;
                writeln!(w, "scores       {}", joined(&v.scores))?;
                writeln!(w, "integrable   {}", v.integrable)?;
                writeln!(w, "parabolic    {}", v.parabolic)?;
                match &v.hamiltonian_cycle {
                    Some(c) => writeln!(w, "hamiltonian  true ({} -> {})", joined(c).replace(' ', " -> "), c[0])?,
                    None => writeln!(w, "hamiltonian  false")?,
                }
                writeln!(w, "3-cycles     {}", v.three_cycles)?;
                match (&v.four_profile, v.witness) {
                    (Some(p), w4) => {
                        let counts: Vec<String> = p.iter().map(|c| format!("{} {}", c.class, c.count)).collect();
                        writeln!(w, "forbidden4   {}", v.forbidden4)?;
                        if let Some(q) = w4 {
                            writeln!(w, "witness      {}", joined(&q))?;
                        }
                        writeln!(w, "4-profile    {}", counts.join(", "))?;
                    }
                    (None, _) => writeln!(w, "forbidden4   false (fewer than 4 players)")?,
                }
                writeln!(w, "triples")?;
                for (idx, tr) in v.triples.iter().enumerate() {
                    write!(w, "  {} {} {}  {:<10}", tr.triple[0], tr.triple[1], tr.triple[2], tr.class)?;
                    if let Some(m) = &v.metric {
                        let r = &m.triples[idx];
                        write!(w, "  C = {:<8} {}", r.coefficient, r.component)?;
                    }
                    writeln!(w)?;
                }
                if let Some(m) = &v.metric {
                    writeln!(w, "metric class {}", m.class)?;
                }
                Ok(())
            })()
            .map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn solve(fmt: Format, t: &Tournament, out: &mut dyn Write) -> Outcome {
    let sys = constraint_system(t);
    let space = solve_family(t);
    let v = SolveView::new(t, sys.rows.len(), &space);
    match fmt {
        Format::Json => json(out, &v)?,
        Format::Csv => {
            let mut header = vec!["vector".to_string()];
            header.extend(v.edges.iter().map(|[i, j]| format!("l{i}_{j}")));
            let mut rows: Vec<Vec<String>> = v
                .basis
                .iter()
                .enumerate()
                .map(|(b, row)| std::iter::once(format!("basis{}", b + 1)).chain(row.iter().cloned()).collect())
                .collect();
            if let Some(s) = &v.sample {
                rows.push(std::iter::once("sample".to_string()).chain(s.iter().cloned()).collect());
            }
            if let Some(c) = &v.certificate {
                rows.push(std::iter::once("combination".to_string()).chain(c.combination.iter().cloned()).collect());
            }
            csv_table(out, &header, &rows)?;
        }
        Format::Text => {
            let edge_names: Vec<String> = v.edges.iter().map(|[i, j]| format!("l{i}_{j}")).collect();
            let w = &mut *out;
            (|| -> std::io::Result<()> {
                writeln!(w, "tournament   {}", v.code)?;
                writeln!(w, "canonical    {}", v.canonical)?;
                writeln!(w, "rows         {}", v.rows)?;
                writeln!(w, "dimension    {}", v.dimension)?;
                let free: Vec<String> = v.free_edges.iter().map(|[i, j]| format!("l{i}_{j}")).collect();
                writeln!(w, "free         {}", free.join(" "))?;
                writeln!(w, "variables    {}", edge_names.join(" "))?;
                for (b, row) in v.basis.iter().enumerate() {
                    writeln!(w, "basis {:<6} {}", b + 1, row.join(" "))?;
                }
                writeln!(w, "verdict      {}", v.verdict)?;
                if let (Some(s), Some(m)) = (&v.sample, &v.margin) {
                    writeln!(w, "sample       {}", s.join(" "))?;
                    writeln!(w, "margin       {m}")?;
                }
                if let Some(c) = &v.certificate {
                    writeln!(w, "multipliers  {}", c.multipliers.join(" "))?;
                    writeln!(w, "combination  {}", c.combination.join(" "))?;
                }
                Ok(())
            })()
            .map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn family(
    fmt: Format,
    n: usize,
    k: usize,
    params: Option<&[Rational]>,
    emit_matrix: bool,
    symbolic: bool,
    out: &mut dyn Write,
) -> Outcome {
    let t = family_tournament(n, k).map_err(usage)?;
    let given = params.map(|p| FamilyParams::new(n, k, p.to_vec()).map_err(usage)).transpose()?;
    let mut samples = default_samples(n, k);
    samples.extend(given.clone());
    let report = verify_family_with(n, k, &samples).map_err(usage)?;
    let metric = given.as_ref().map(family_metric);
    let class = metric.as_ref().map(|m| flagsym_core::classify_metric(&t, m).expect("sizes agree").label());
    let matrix = emit_matrix.then(|| match (&metric, symbolic) {
        (Some(m), false) => numeric_entries(m),
        _ => symbolic_entries(n, k),
    });
    let v = FamilyView {
        n,
        k,
        code: t.code(),
        canonical: flagsym_core::canonical_code(&t).to_string(),
        params: flagsym_core::families::param_names(n),
        values: given.as_ref().map(|p| text(p.free())),
        class,
        dimension: report.dimension,
        verified: report.passed(),
        failures: report.failures.clone(),
        matrix,
    };
    match fmt {
        Format::Json => json(out, &v)?,
        Format::Csv => match &v.matrix {
            Some(m) => {
                let mut header = vec![String::new()];
                header.extend((1..=n).map(|j| j.to_string()));
                let rows: Vec<Vec<String>> = m
                    .iter()
                    .enumerate()
                    .map(|(i, row)| std::iter::once((i + 1).to_string()).chain(row.iter().cloned()).collect())
                    .collect();
                csv_table(out, &header, &rows)?;
            }
            None => {
                let header = strings(&["n", "k", "code", "canonical", "class", "dimension", "verified"]);
                let row = vec![
                    n.to_string(),
                    k.to_string(),
                    v.code.clone(),
                    v.canonical.clone(),
                    v.class.unwrap_or("").to_string(),
                    v.dimension.to_string(),
                    v.verified.to_string(),
                ];
                csv_table(out, &header, &[row])?;
            }
        },
        Format::Text => {
            let w = &mut *out;
            (|| -> std::io::Result<()> {
                writeln!(w, "family       T({n},{k})")?;
                writeln!(w, "tournament   {}", v.code)?;
                writeln!(w, "canonical    {}", v.canonical)?;
                writeln!(w, "parameters   {}", v.params.join(" "))?;
                if let Some(vals) = &v.values {
                    writeln!(w, "values       {}", vals.join(" "))?;
                }
                if let Some(c) = v.class {
                    writeln!(w, "metric class {c}")?;
                }
                writeln!(w, "dimension    {}", v.dimension)?;
                writeln!(w, "verified     {}", v.verified)?;
                for f in &v.failures {
                    writeln!(w, "  failure: {f}")?;
                }
                if let Some(m) = &v.matrix {
                    let width = m.iter().flatten().map(|e| e.len()).max().unwrap_or(1);
                    writeln!(w, "matrix")?;
                    for row in m {
                        let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
                        writeln!(w, "  {}", cells.join("  "))?;
                    }
                }
                Ok(())
            })()
            .map_err(io)?;
        }
    }
    let ok = v.verified && v.class != Some("none");
    Ok(if ok { EXIT_OK } else { EXIT_VERIFICATION })
}

fn census_path(explicit: Option<PathBuf>, n: usize) -> Option<PathBuf> {
    explicit.or_else(|| {
        std::env::var_os(CACHE_DIR_VAR)
            .filter(|d| !d.is_empty())
            .map(|d| PathBuf::from(d).join(format!("census-n{n}.jsonl")))
    })
}

#[derive(Serialize)]
struct CensusSummary {
    n: usize,
    classes: usize,
    admitting: usize,
    dimensions: Vec<usize>,
    path: Option<String>,
}

fn census(fmt: Format, n: usize, path: Option<PathBuf>, jobs: Option<usize>, out: &mut dyn Write) -> Outcome {
    let records = parallel::census(n, jobs).map_err(usage)?;
    let path = census_path(path, n);
    if let Some(p) = &path {
        census_file::save_jsonl(&records, p).map_err(io)?;
    }
    let violations = flagsym_core::survey::record_invariant_violations(&records);
    let mut dims: Vec<usize> = records.iter().filter(|r| r.admits12s).map(|r| r.dimension).collect();
    dims.sort_unstable();
    let summary = CensusSummary {
        n,
        classes: records.len(),
        admitting: dims.len(),
        dimensions: dims,
        path: path.as_ref().map(|p| p.display().to_string()),
    };
    match (fmt, &path) {
        (Format::Json, None) => census_file::write_jsonl(&records, &mut *out).map_err(io)?,
        (Format::Json, Some(_)) => json(out, &summary)?,
        (Format::Csv, _) => census_file::write_csv(&records, &mut *out).map_err(io)?,
        (Format::Text, _) => census_text(&summary, &records, path.is_none(), out).map_err(io)?,
    }
    if violations.is_empty() {
        Ok(EXIT_OK)
    } else {
        Err(Failure::Runtime(
            violations.iter().map(|(c, m)| format!("{c}: {m}")).collect::<Vec<_>>().join("\n"),
        ))
    }
}

fn census_text(s: &CensusSummary, records: &[CensusRecord], table: bool, w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(w, "n {}  classes {}  admitting {}  dimensions {}", s.n, s.classes, s.admitting, joined(&s.dimensions))?;
    if let Some(p) = &s.path {
        writeln!(w, "written to {p}")?;
    }
    if table {
        let code_w = records.iter().map(|r| r.code.to_string().len()).max().unwrap_or(4).max(4);
        let score_w = (2 * s.n).max(5);
        writeln!(w, "{:<code_w$}  {:<score_w$}  int  par  ham  f4   adm  dim  family", "code", "score")?;
        let yn = |b: bool| if b { "yes" } else { "no" };
        for r in records {
            let row = CensusRow::from(r);
            let family = row.family.map(|(n, k)| format!("({n},{k})")).unwrap_or_default();
            writeln!(
                w,
                "{:<code_w$}  {:<score_w$}  {:<3}  {:<3}  {:<3}  {:<3}  {:<3}  {:<3}  {}",
                row.code,
                joined(&row.score),
                yn(row.integrable),
                yn(row.parabolic),
                yn(row.hamiltonian),
                yn(row.forbidden4),
                yn(row.admits12s),
                row.dimension,
                family
            )?;
        }
    }
    Ok(())
}

fn verify_cmd(fmt: Format, target: Target, n_max: usize, seed: u64, jobs: Option<usize>, out: &mut dyn Write) -> Outcome {
    let report = verify::run(target, n_max, seed, jobs).map_err(usage)?;
    match fmt {
        Format::Json => json(out, &report)?,
        Format::Csv => {
            let header = strings(&["target", "n_max", "checked", "violations"]);
            let row = vec![
                target.name().to_string(),
                n_max.to_string(),
                report.checked.to_string(),
                report.violations.len().to_string(),
            ];
            csv_table(out, &header, &[row])?;
        }
        Format::Text => {
            let status = if report.passed() { "PASS" } else { "FAIL" };
            (|| -> std::io::Result<()> {
                writeln!(out, "{status} {} n<={} checked {}", target.name(), n_max, report.checked)?;
                for v in &report.violations {
                    writeln!(out, "  {v}")?;
                }
                Ok(())
            })()
            .map_err(io)?;
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFICATION })
}

fn check_n(what: &str, n: usize, min: usize, max: usize) -> Result<(), Failure> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{what} supports {min} <= n <= {max}, got {n}")))
    }
}

fn conjecture(fmt: Format, which: u8, n: usize, jobs: Option<usize>, out: &mut dyn Write) -> Outcome {
    let min = if which == 1 { 4 } else { 3 };
    check_n("conjecture experiment", n, min, flagsym_core::survey::MAX_CENSUS)?;
    let start = Instant::now();
    let records = parallel::census(n, jobs).map_err(usage)?;
    if which == 1 {
        let r = Conjecture1Report::from_records(n, &records);
        let v = Conjecture1View::new(&r, start.elapsed().as_millis());
        match fmt {
            Format::Json => json(out, &v)?,
            Format::Csv => {
                let header = strings(&[
                    "n",
                    "classes",
                    "agreements",
                    "equivalence_holds",
                    "forbidden_but_admitting",
                    "clean_but_not_admitting",
                ]);
                let row = vec![
                    n.to_string(),
                    v.classes.to_string(),
                    v.agreements.to_string(),
                    v.equivalence_holds.to_string(),
                    v.forbidden_but_admitting.len().to_string(),
                    v.clean_but_not_admitting.len().to_string(),
                ];
                csv_table(out, &header, &[row])?;
            }
            Format::Text => (|| -> std::io::Result<()> {
                writeln!(out, "conjecture 1 at n = {n}: {} classes, {} agree", v.classes, v.agreements)?;
                writeln!(out, "equivalence holds        {}", v.equivalence_holds)?;
                writeln!(out, "forbidden but admitting  {}", v.forbidden_but_admitting.len())?;
                for c in &v.forbidden_but_admitting {
                    writeln!(out, "  {c}")?;
                }
                writeln!(out, "clean but not admitting  {}", v.clean_but_not_admitting.len())?;
                for c in &v.clean_but_not_admitting {
                    writeln!(out, "  {c}")?;
                }
                writeln!(out, "elapsed                  {} ms", v.elapsed_ms)
            })()
            .map_err(io)?,
        }
        // only the direction forced by the forbidden 4-subtournaments is a hard requirement
        Ok(if v.forbidden_but_admitting.is_empty() { EXIT_OK } else { EXIT_VERIFICATION })
    } else {
        let r = Conjecture2Report::from_records(n, &records);
        let v = Conjecture2View::new(&r, start.elapsed().as_millis());
        match fmt {
            Format::Json => json(out, &v)?,
            Format::Csv => {
                let header = strings(&["n", "admitting_non_integrable", "holds", "counterexamples"]);
                let row = vec![
                    n.to_string(),
                    v.admitting_non_integrable.to_string(),
                    v.holds.to_string(),
                    v.counterexamples.len().to_string(),
                ];
                csv_table(out, &header, &[row])?;
            }
            Format::Text => (|| -> std::io::Result<()> {
                writeln!(out, "conjecture 2 at n = {n}: {} admitting non-integrable classes", v.admitting_non_integrable)?;
                writeln!(out, "all of dimension n       {}", v.holds)?;
                for c in &v.counterexamples {
                    writeln!(out, "  {} dimension {}", c.code, c.dimension)?;
                }
                writeln!(out, "elapsed                  {} ms", v.elapsed_ms)
            })()
            .map_err(io)?,
        }
        Ok(EXIT_OK)
    }
}

fn normal(fmt: Format, n: usize, out: &mut dyn Write) -> Outcome {
    let r = normal_metric_survey(n).map_err(usage)?;
    let v = NormalView::from(&r);
    match fmt {
        Format::Json => json(out, &v)?,
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                v.accepting.iter().map(|e| vec![e.code.clone(), e.class.to_string()]).collect();
            csv_table(out, &strings(&["code", "class"]), &rows)?;
        }
        Format::Text => (|| -> std::io::Result<()> {
            writeln!(out, "normal metric at n = {n}: {} of {} classes accept", v.accepting.len(), v.classes)?;
            for e in &v.accepting {
                writeln!(out, "  {} {}", e.code, e.class)?;
            }
            Ok(())
        })()
        .map_err(io)?,
    }
    Ok(EXIT_OK)
}

