//! Serializable views of core results. Rationals appear as `"p/q"` strings,
//! integers without a denominator.

use flagsym_core::families::{param_names, symbolic_matrix, weight_matrix};
use flagsym_core::rational::to_text;
use flagsym_core::survey::{Conjecture1Report, Conjecture2Report, NormalReport};
use flagsym_core::symplectic::{d_omega_report, MetricSpec, Positivity, SolutionSpace};
use flagsym_core::tournament::FourClass;
use flagsym_core::{canonical_code, classify_metric, Rational, Tournament, TripleClass};
use serde::Serialize;

pub fn text(v: &[Rational]) -> Vec<String> {
    v.iter().map(to_text).collect()
}

pub fn four_class_name(c: FourClass) -> &'static str {
    match c {
        FourClass::Transitive => "transitive",
        FourClass::Strong => "strong",
        FourClass::SourceOverCycle => "source-over-cycle",
        FourClass::CycleOverSink => "cycle-over-sink",
    }
}

fn triple_class_name(c: TripleClass) -> &'static str {
    match c {
        TripleClass::Cyclic => "cyclic",
        TripleClass::Transitive => "transitive",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleView {
    pub triple: [usize; 3],
    pub class: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct MetricTripleView {
    pub triple: [usize; 3],
    pub coefficient: String,
    pub component: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct MetricView {
    pub lambda: Vec<String>,
    pub class: &'static str,
    pub triples: Vec<MetricTripleView>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FourCountView {
    pub class: &'static str,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyView {
    pub code: String,
    pub canonical: String,
    pub n: usize,
    pub scores: Vec<usize>,
    pub integrable: bool,
    pub parabolic: bool,
    pub hamiltonian: bool,
    pub hamiltonian_cycle: Option<Vec<usize>>,
    pub three_cycles: usize,
    pub forbidden4: bool,
    pub witness: Option<[usize; 4]>,
    pub four_profile: Option<Vec<FourCountView>>,
    pub triples: Vec<TripleView>,
    pub metric: Option<MetricView>,
}

impl ClassifyView {
    pub fn new(t: &Tournament, metric: Option<&MetricSpec>) -> ClassifyView {
        let n = t.n();
        let profile = (n >= 4).then(|| t.four_subtournament_profile().expect("n >= 4"));
        let mut triples = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let class = t.triple_class(i, j, k).expect("in range");
                    triples.push(TripleView { triple: [i, j, k], class: triple_class_name(class) });
                }
            }
        }
        let metric = metric.map(|m| MetricView {
            lambda: text(m.weights()),
            class: classify_metric(t, m).expect("sizes checked by caller").label(),
            triples: d_omega_report(t, m)
                .expect("sizes checked by caller")
                .into_iter()
                .map(|r| MetricTripleView {
                    triple: [r.triple.0, r.triple.1, r.triple.2],
                    coefficient: to_text(&r.coefficient),
                    component: r.component.label(),
                })
                .collect(),
        });
        ClassifyView {
            code: t.code(),
            canonical: canonical_code(t).to_string(),
            n,
            scores: t.score_vector().0,
            integrable: t.is_transitive(),
            parabolic: t.is_parabolic(),
            hamiltonian: t.is_hamiltonian(),
            hamiltonian_cycle: t.hamiltonian_cycle(),
            three_cycles: t.three_cycle_count(),
            forbidden4: profile.as_ref().is_some_and(|p| p.has_forbidden()),
            witness: profile.as_ref().and_then(|p| p.witness),
            four_profile: profile.map(|p| {
                FourClass::ALL
                    .into_iter()
                    .map(|c| FourCountView { class: four_class_name(c), count: p.count(c) })
                    .collect()
            }),
            triples,
            metric,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateView {
    pub multipliers: Vec<String>,
    pub combination: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveView {
    pub code: String,
    pub canonical: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub rows: usize,
    pub dimension: usize,
    pub free_edges: Vec<[usize; 2]>,
    pub basis: Vec<Vec<String>>,
    /// `"feasible"` or `"infeasible"`.
    pub verdict: &'static str,
    pub sample: Option<Vec<String>>,
    pub margin: Option<String>,
    pub certificate: Option<CertificateView>,
}

impl SolveView {
    pub fn new(t: &Tournament, rows: usize, s: &SolutionSpace) -> SolveView {
        let edges: Vec<[usize; 2]> = flagsym_core::symplectic::edges(t.n()).into_iter().map(|(i, j)| [i, j]).collect();
        let (verdict, sample, margin, certificate) = match &s.positivity {
            Positivity::FeasibleInterior { sample, margin } => {
                ("feasible", Some(text(sample.weights())), Some(to_text(margin)), None)
            }
            Positivity::Infeasible(c) => (
                "infeasible",
                None,
                None,
                Some(CertificateView { multipliers: text(&c.multipliers), combination: text(&c.combination) }),
            ),
        };
        SolveView {
            code: t.code(),
            canonical: canonical_code(t).to_string(),
            n: t.n(),
            free_edges: s.free_edges.iter().map(|&e| edges[e]).collect(),
            edges,
            rows,
            dimension: s.dimension,
            basis: s.basis.iter().map(|b| text(b)).collect(),
            verdict,
            sample,
            margin,
            certificate,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyView {
    pub n: usize,
    pub k: usize,
    pub code: String,
    pub canonical: String,
    pub params: Vec<String>,
    pub values: Option<Vec<String>>,
    pub class: Option<&'static str>,
    pub dimension: usize,
    pub verified: bool,
    pub failures: Vec<String>,
    pub matrix: Option<Vec<Vec<String>>>,
}

/// Matrix entries as sums of parameter names, `"0"` on the diagonal.
pub fn symbolic_entries(n: usize, k: usize) -> Vec<Vec<String>> {
    let names = param_names(n);
    symbolic_matrix(n, k)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|terms| {
                    if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.iter().map(|&p| names[p].as_str()).collect::<Vec<_>>().join(" + ")
                    }
                })
                .collect()
        })
        .collect()
}

pub fn numeric_entries(m: &MetricSpec) -> Vec<Vec<String>> {
    weight_matrix(m).iter().map(|row| text(row)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalView {
    pub n: usize,
    pub classes: usize,
    pub accepting: Vec<NormalEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalEntry {
    pub code: String,
    pub class: &'static str,
}

impl From<&NormalReport> for NormalView {
    fn from(r: &NormalReport) -> Self {
        NormalView {
            n: r.n,
            classes: r.classes,
            accepting: r
                .accepting
                .iter()
                .map(|(c, m)| NormalEntry { code: c.to_string(), class: m.label() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Conjecture1View {
    pub which: u8,
    pub n: usize,
    pub classes: usize,
    pub agreements: usize,
    pub equivalence_holds: bool,
    pub forbidden_but_admitting: Vec<String>,
    pub clean_but_not_admitting: Vec<String>,
    pub elapsed_ms: u128,
}

impl Conjecture1View {
    pub fn new(r: &Conjecture1Report, elapsed_ms: u128) -> Self {
        Conjecture1View {
            which: 1,
            n: r.n,
            classes: r.classes,
            agreements: r.agreements,
            equivalence_holds: r.equivalence_holds(),
            forbidden_but_admitting: r.forbidden_but_admitting.iter().map(|c| c.to_string()).collect(),
            clean_but_not_admitting: r.clean_but_not_admitting.iter().map(|c| c.to_string()).collect(),
            elapsed_ms,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionEntry {
    pub code: String,
    pub dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Conjecture2View {
    pub which: u8,
    pub n: usize,
    pub admitting_non_integrable: usize,
    pub holds: bool,
    pub counterexamples: Vec<DimensionEntry>,
    pub elapsed_ms: u128,
}

impl Conjecture2View {
    pub fn new(r: &Conjecture2Report, elapsed_ms: u128) -> Self {
        Conjecture2View {
            which: 2,
            n: r.n,
            admitting_non_integrable: r.admitting_non_integrable,
            holds: r.holds(),
            counterexamples: r
                .counterexamples
                .iter()
                .map(|(c, d)| DimensionEntry { code: c.to_string(), dimension: *d })
                .collect(),
            elapsed_ms,
        }
    }
}
