//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Runs without the libtest harness so the lines are always shown.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use flagsym::parallel;
use flagsym_core::families::family_weights;
use flagsym_core::isoclass::{brute_force_classes, enumerate_classes};
use flagsym_core::linalg::rank;
use flagsym_core::rational::{frac, int};
use flagsym_core::survey::verify_conjecture1;
use flagsym_core::symplectic::{constraint_system, d_omega_report, edge_index, MetricSpec};
use flagsym_core::*;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn kahler_dimension() -> Check {
    for n in 3..=9 {
        let s = solve_family(&Tournament::canonical(n));
        ensure(s.dimension == n - 1 && s.admits(), || format!("n={n}: dimension {} admits {}", s.dimension, s.admits()))?;
        s.verify(&constraint_system(&Tournament::canonical(n))).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok("n = 3..9".into())
}

fn families_of_dimension_n() -> Check {
    let mut count = 0;
    for n in 4..=9 {
        for k in 1..=n - 3 {
            count += 1;
            let t = family_tournament(n, k).map_err(|e| e.to_string())?;
            let sys = constraint_system(&t);
            let s = solve_family(&t);
            ensure(s.dimension == n && s.admits(), || format!("({n},{k}): dimension {}", s.dimension))?;
            // images of the unit parameter vectors under the closed form
            let images: Vec<Vec<Rational>> = (0..n)
                .map(|p| family_weights(n, k, &(0..n).map(|q| int(i64::from(p == q))).collect::<Vec<_>>()))
                .collect();
            ensure(images.iter().all(|v| sys.is_satisfied_by(v)), || format!("({n},{k}): closed form leaves the kernel"))?;
            ensure(rank(&images) == n, || format!("({n},{k}): closed form has rank {}", rank(&images)))?;
            let r = verify_family(n, k).map_err(|e| e.to_string())?;
            ensure(r.passed() && r.span_matches, || format!("({n},{k}): {:?}", r.failures))?;
        }
    }
    Ok(format!("{count} families, n = 4..9"))
}

fn explicit_relations() -> Check {
    let t = family_tournament(4, 1).map_err(|e| e.to_string())?;
    let s = solve_family(&t);
    let e = |i, j| edge_index(4, i, j);
    ensure(s.dimension == 4, || format!("dimension {}", s.dimension))?;
    for b in &s.basis {
        ensure(b[e(1, 3)] == &b[e(1, 2)] + &b[e(2, 3)], || "l1_3 != l1_2 + l2_3".into())?;
        ensure(b[e(2, 4)] == &b[e(2, 3)] + &b[e(3, 4)], || "l2_4 != l2_3 + l3_4".into())?;
    }
    ensure(s.free_edges.contains(&e(1, 4)), || "l1_4 is not free".into())?;
    Ok("l1_3 = l1_2 + l2_3, l2_4 = l2_3 + l3_4, l1_4 free".into())
}

fn forbidden_classes_infeasible() -> Check {
    let mut counts = Vec::new();
    for n in 4..=6 {
        let mut forbidden = 0;
        for c in enumerate_classes(n).map_err(|e| e.to_string())? {
            let t = c.tournament();
            if !t.four_subtournament_profile().map_err(|e| e.to_string())?.has_forbidden() {
                continue;
            }
            forbidden += 1;
            let s = solve_family(&t);
            let cert = s.certificate().ok_or_else(|| format!("{c}: feasible despite a forbidden 4-subtournament"))?;
            ensure(cert.verify(&constraint_system(&t)), || format!("{c}: certificate fails"))?;
        }
        counts.push(format!("n={n}: {forbidden}"));
    }
    Ok(format!("infeasible with certificate ({})", counts.join(", ")))
}

fn burnside(n: u64) -> u64 {
    // tournaments fixed by a permutation exist only for odd cycle types
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    fn walk(left: u64, max: u64, parts: &mut Vec<u64>, n: u64, total: &mut (u128, u128)) {
        if left == 0 {
            let mut centralizer: u128 = 1;
            let mut mult = std::collections::BTreeMap::<u64, u32>::new();
            for &p in parts.iter() {
                *mult.entry(p).or_default() += 1;
            }
            for (&p, &m) in &mult {
                centralizer *= u128::from(p).pow(m) * (1..=u128::from(m)).product::<u128>();
            }
            let mut exp: u64 = parts.iter().map(|&p| (p - 1) / 2).sum();
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    exp += gcd(parts[i], parts[j]);
                }
            }
            let n_fact: u128 = (1..=u128::from(n)).product();
            total.0 += (n_fact / centralizer) << exp;
            return;
        }
        let mut p = max.min(left);
        if p.is_multiple_of(2) {
            p -= 1;
        }
        while p >= 1 {
            parts.push(p);
            walk(left - p, p, parts, n, total);
            parts.pop();
            if p < 2 {
                break;
            }
            p -= 2;
        }
    }
    let mut total = (0u128, 0u128);
    walk(n, n, &mut Vec::new(), n, &mut total);
    (total.0 / (1..=u128::from(n)).product::<u128>()) as u64
}

fn census_counts() -> Check {
    let expected = [(5, 12, vec![4, 5, 5, 5]), (6, 56, vec![5, 6, 6, 6, 6, 6]), (7, 456, vec![6, 7, 7, 7, 7, 7, 7, 7, 7, 7])];
    for (n, classes, dims) in expected {
        let records = parallel::census(n, None).map_err(|e| e.to_string())?;
        ensure(records.len() == classes, || format!("n={n}: {} classes", records.len()))?;
        ensure(burnside(n as u64) == classes as u64, || format!("n={n}: Burnside count {}", burnside(n as u64)))?;
        if n <= 6 {
            let brute = brute_force_classes(n);
            ensure(records.iter().map(|r| r.code).eq(brute), || format!("n={n}: brute force disagrees"))?;
        }
        let mut got: Vec<usize> = records.iter().filter(|r| r.admits12s).map(|r| r.dimension).collect();
        got.sort_unstable();
        ensure(got == dims, || format!("n={n}: admitting dimensions {got:?}"))?;
    }
    Ok("4/12 {4,5,5,5}; 6/56 {5,6^5}; 10/456 {6,7^9}".into())
}

fn normal_metric() -> Check {
    let three = flagsym_core::survey::normal_metric_survey(3).map_err(|e| e.to_string())?;
    ensure(three.accepting.len() == 1 && three.accepting[0].0.tournament().three_cycle_count() == 1, || {
        format!("n=3: {:?}", three.accepting)
    })?;
    for n in 4..=7 {
        let r = flagsym_core::survey::normal_metric_survey(n).map_err(|e| e.to_string())?;
        ensure(r.accepting.is_empty(), || format!("n={n}: {} classes accept", r.accepting.len()))?;
    }
    Ok("3-cycle only at n=3, none for n = 4..7".into())
}

fn family_identification() -> Check {
    let t41 = family_tournament(4, 1).map_err(|e| e.to_string())?;
    let strong4 = enumerate_classes(4)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|c| c.tournament().is_strong())
        .ok_or("no strong 4-class")?;
    ensure(canonical_code(&t41) == strong4, || "T(4,1) is not the strong 4-class".into())?;
    ensure(are_isomorphic(&t41, &Tournament::parabolic(4)).unwrap_or(false), || "T(4,1) is not parabolic".into())?;
    for n in 5..=9 {
        // the score formula covers n >= 2k+1; beyond it T(n,k) and T(n,n-1-k) share scores
        let in_range: Vec<usize> = (1..=n - 3).filter(|&k| n > 2 * k).collect();
        let scores: BTreeSet<Vec<usize>> =
            in_range.iter().map(|&k| family_tournament(n, k).unwrap().score_vector().sorted()).collect();
        ensure(scores.len() == in_range.len(), || format!("n={n}: score multisets collide"))?;
        let codes: BTreeSet<CanonicalCode> = (1..=n - 3).map(|k| canonical_code(&family_tournament(n, k).unwrap())).collect();
        ensure(codes.len() == n - 3, || format!("n={n}: isomorphic family tournaments"))?;
    }
    Ok("T(4,1) parabolic; distinct k non-isomorphic for n = 5..9, distinct scores for n >= 2k+1".into())
}

fn property_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut relabelings = 0;
    for n in 3..=6 {
        for c in enumerate_classes(n).map_err(|e| e.to_string())? {
            let t = c.tournament();
            ensure(canonical_code(&t) == c, || format!("{c}: not idempotent"))?;
            for _ in 0..100 {
                let mut p: Vec<usize> = (1..=n).collect();
                p.shuffle(&mut rng);
                relabelings += 1;
                ensure(canonical_code(&t.relabel(&p).unwrap()) == c, || format!("{c}: relabeling {p:?} changes the code"))?;
            }
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(3..=6);
        let t = Tournament::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap();
        let m = MetricSpec::from_fn(n, |_, _| frac(rng.gen_range(1..100), rng.gen_range(1..30))).unwrap();
        for r in d_omega_report(&t, &m).unwrap() {
            if r.class == TripleClass::Cyclic {
                let (i, j, k) = r.triple;
                let sum = m.get(i, j) + m.get(i, k) + m.get(j, k);
                ensure(!r.coefficient.is_zero() && r.coefficient.abs() == sum, || format!("{t} {:?}", r.triple))?;
            }
        }
    }
    for n in 3..=5 {
        ensure(enumerate_classes(n).unwrap() == brute_force_classes(n), || format!("n={n}: enumeration strategies differ"))?;
    }
    let mut solves = 0;
    for n in 3..=7 {
        for c in enumerate_classes(n).unwrap() {
            let t = c.tournament();
            solve_family(&t).verify(&constraint_system(&t)).map_err(|e| format!("{c}: {e}"))?;
            solves += 1;
        }
    }
    Ok(format!("{relabelings} relabelings, 1000 metrics, {solves} solves substituted"))
}

fn conjecture_experiments() -> Check {
    let mut notes = Vec::new();
    for n in 4..=7 {
        let r = verify_conjecture1(n).map_err(|e| e.to_string())?;
        ensure(r.forbidden_but_admitting.is_empty(), || format!("n={n}: {:?}", r.forbidden_but_admitting))?;
        notes.push(format!("n={n} {}/{}", r.agreements, r.classes));
    }
    Ok(format!("no forbidden-but-admitting class; converse agreement {}", notes.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Kahler dimension", Duration::from_secs(1), kahler_dimension),
        ("families of dimension n", Duration::from_secs(10), families_of_dimension_n),
        ("explicit relations at n=4", Duration::from_secs(1), explicit_relations),
        ("forbidden 4-subtournaments", Duration::from_secs(30), forbidden_classes_infeasible),
        ("census counts", Duration::from_secs(120), census_counts),
        ("normal metric", Duration::from_secs(60), normal_metric),
        ("family identification", Duration::from_secs(10), family_identification),
        ("property suites", Duration::from_secs(120), property_suites),
        ("conjecture experiments", Duration::from_secs(120), conjecture_experiments),
    ];
    let mut failed = 0;
    for (idx, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; exceeded {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {} {name} ({:.2} s): {detail}", idx + 1, elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
