use flagsym_core::isoclass::brute_force_classes;
use flagsym_core::survey::{
    normal_metric_survey, record_invariant_violations, verify_conjecture1, verify_conjecture2, Conjecture1Report,
};
use flagsym_core::symplectic::{constraint_system, MetricClass};
use flagsym_core::{census, enumerate_classes, solve_family, Tournament};

fn admitting_dimensions(n: usize) -> (usize, usize, Vec<usize>) {
    let records = census(n).unwrap();
    let mut dims: Vec<usize> = records.iter().filter(|r| r.admits12s).map(|r| r.dimension).collect();
    dims.sort();
    (records.len(), dims.len(), dims)
}

#[test]
fn census_counts_for_four_to_six() {
    assert_eq!(admitting_dimensions(4), (4, 2, vec![3, 4]));
    assert_eq!(admitting_dimensions(5), (12, 4, vec![4, 5, 5, 5]));
    assert_eq!(admitting_dimensions(6), (56, 6, vec![5, 6, 6, 6, 6, 6]));
}

#[test]
fn records_match_their_tournaments() {
    for n in 3..=6 {
        let records = census(n).unwrap();
        assert_eq!(records.iter().map(|r| r.code).collect::<Vec<_>>(), enumerate_classes(n).unwrap());
        assert!(record_invariant_violations(&records).is_empty());
        for r in &records {
            let t = r.code.tournament();
            assert_eq!(r.score, t.score_vector().sorted());
            assert_eq!(r.integrable, t.three_cycle_count() == 0);
            assert_eq!(r.hamiltonian, t.is_strong());
            assert_eq!(r.parabolic, flagsym_core::are_isomorphic(&t, &Tournament::parabolic(n)).unwrap());
            if let Some(w) = r.witness {
                assert!(r.forbidden4);
                let sub = t.subtournament(&w).unwrap();
                assert!(sub.four_subtournament_profile().unwrap().has_forbidden());
            }
            let s = solve_family(&t);
            s.verify(&constraint_system(&t)).unwrap();
            if r.forbidden4 {
                assert!(s.certificate().is_some());
            }
        }
    }
}

#[test]
fn parabolic_and_family_classes_admit() {
    for n in 4..=6 {
        let records = census(n).unwrap();
        let parabolic: Vec<_> = records.iter().filter(|r| r.parabolic).collect();
        assert_eq!(parabolic.len(), 1);
        assert!(parabolic[0].admits12s);
        let families: Vec<_> = records.iter().filter_map(|r| r.family.map(|f| (f, r.admits12s, r.dimension))).collect();
        assert_eq!(families.len(), n - 3);
        assert!(families.iter().all(|&(_, a, d)| a && d == n));
    }
}

#[test]
fn two_enumeration_strategies_agree_on_census_keys() {
    for n in 3..=5 {
        let codes: Vec<_> = census(n).unwrap().into_iter().map(|r| r.code).collect();
        assert_eq!(codes, brute_force_classes(n));
    }
}

#[test]
fn conjecture_reports() {
    for n in 4..=6 {
        let r = verify_conjecture1(n).unwrap();
        assert!(r.forbidden_but_admitting.is_empty());
        assert_eq!(r.classes, enumerate_classes(n).unwrap().len());
        assert_eq!(r, Conjecture1Report::from_records(n, &census(n).unwrap()));
        let c2 = verify_conjecture2(n).unwrap();
        assert_eq!(c2.admitting_non_integrable, admitting_dimensions(n).1 - 1);
    }
}

#[test]
fn normal_metric_only_on_the_three_cycle() {
    let r = normal_metric_survey(3).unwrap();
    assert_eq!(r.accepting.len(), 1);
    assert_eq!(r.accepting[0].1, MetricClass::OneTwoSymplectic);
    assert_eq!(r.accepting[0].0.tournament().three_cycle_count(), 1);
    for n in 4..=6 {
        assert!(normal_metric_survey(n).unwrap().accepting.is_empty());
    }
}

#[test]
fn census_is_deterministic() {
    assert_eq!(census(6).unwrap(), census(6).unwrap());
}
