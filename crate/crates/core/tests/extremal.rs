use distspec::corpus::corpus;
use distspec::extremal::{self, lemmas, rank, Direction, TieResolution, Verifier};
use distspec::{Error, FamilySpec, Solver};

#[test]
fn max_over_size_small() {
    for m in 5..=7 {
        let r = extremal::verify_max_over_size(m).unwrap();
        assert!(r.holds, "{}", r.to_text(5));
        let top: Vec<_> = r.ranking.iter().take(3).map(|e| e.family.clone().unwrap()).collect();
        let n = m + 1;
        assert_eq!(
            top,
            vec![format!("path:{n}"), format!("atree:{n}"), format!("btree:{n}")]
        );
        assert!(r.unique_winner());
    }
}

#[test]
fn max_over_size_family_only_mode() {
    let r = extremal::verify_max_over_size(40).unwrap();
    assert!(r.holds);
    assert_eq!(r.candidates, 3);
    assert!(r.scope.contains("family-only"));
    assert!(extremal::verify_max_over_size(4).is_err());
}

#[test]
fn min_structure_examples() {
    let r = extremal::verify_min_structure(21).unwrap();
    assert!(r.holds, "{}", r.to_text(5));
    assert!((r.winner().unwrap().rho - 6.0).abs() < 1e-9);
    let r = extremal::verify_min_structure(16).unwrap();
    assert!(r.holds, "{}", r.to_text(5));
    assert!(r.audit("clause iii").is_some());
    let r = extremal::verify_min_structure(12).unwrap();
    assert!(r.holds, "{}", r.to_text(5));
    let w = &r.winner().unwrap().graph;
    assert_eq!((w.max_degree(), w.min_degree()), (4, 4));
}

#[test]
fn min_identity_examples() {
    let r = extremal::verify_min_identity(16).unwrap();
    assert!(r.holds, "{}", r.to_text(5));
    assert_eq!(r.winner().unwrap().family.as_deref(), Some("pnc:7,2"));
    assert!((r.winner().unwrap().rho - 7.4553).abs() < 5e-5);
    // n = 9, s = 1 lies below the proven range.
    assert!(matches!(extremal::verify_min_identity(29), Err(Error::OutsideRange(_))));
}

#[test]
fn forest_extremes() {
    let r = extremal::verify_forest_extremal(6, 2).unwrap();
    assert!(r.holds, "{}", r.to_text(20));
    assert_eq!(
        r.ranking[0].family.as_deref(),
        Some("complement(union(star:5,complete:1))")
    );
    assert_eq!(r.ranking.last().unwrap().family.as_deref(), Some("pnc:6,2"));
    let r = extremal::verify_forest_extremal(8, 3).unwrap();
    assert!(r.holds, "{}", r.to_text(5));
    assert_eq!(
        r.ranking[1].family.as_deref(),
        Some("complement(union(dstar:6,1,complete:1,complete:1))")
    );
    assert!(extremal::verify_forest_extremal(6, 5).is_err());
}

#[test]
fn structured_tables() {
    let [t1, t2] = extremal::tables().unwrap();
    assert_eq!(t1.candidates, 5);
    assert_eq!(t2.candidates, 8);
    assert!(t1.holds && t2.holds);
    assert_eq!(t1.direction, Direction::Ascending);
    let expect1 = [
        ("P_{9,2}", 9.5782),
        ("complement(C5 ∪ 2K2)", 9.5826),
        ("complement(C4 ∪ P3 ∪ K2)", 9.5806),
        ("complement(C3 ∪ 2P3)", 9.5786),
        ("complement(C3 ∪ P4 ∪ K2)", 9.5804),
    ];
    for (label, rho) in expect1 {
        let e = t1.entry_by_family(label).unwrap_or_else(|| panic!("{label}"));
        assert!((e.rho - rho).abs() < 5e-4, "{label}: {}", e.rho);
    }
    assert!((t2.winner().unwrap().rho - 10.6203).abs() < 5e-4);
    assert!((t2.entry_by_family("complement(2C3 ∪ 2K2)").unwrap().rho - 10.6235).abs() < 5e-4);
}

#[test]
fn conjecture_range() {
    assert!(matches!(extremal::conjecture_explore(16), Err(Error::OutsideRange(_))));
    let r = extremal::conjecture_explore(extremal_m(12, 3)).unwrap();
    assert!(r.holds, "{}", r.to_text(50));
}

fn extremal_m(n: usize, s: usize) -> usize {
    (n - 1) * (n - 2) / 2 + s
}

#[test]
fn exact_ties_are_reported() {
    // K_{3,3} and the prism are both 3-regular of diameter 2, so ρ = 7 for each.
    let k33: FamilySpec = "join(complement(complete:3),complement(complete:3))".parse().unwrap();
    let prism: FamilySpec = "complement(cycle:6)".parse().unwrap();
    let graphs = vec![k33.construct().unwrap(), prism.construct().unwrap()];
    let ranking = rank::rank(
        graphs.into_iter(),
        &Solver::default(),
        &Default::default(),
        Direction::Ascending,
    )
    .unwrap();
    let (ties, exact) = rank::tie_set(&ranking, Direction::Ascending).unwrap();
    assert_eq!(ties.len(), 2);
    assert_eq!(ties[1].resolution, TieResolution::ExactTie);
    assert_eq!(exact, 1);
    assert!(ranking.iter().all(|e| (e.rho - 7.0).abs() < 1e-9));
}

#[test]
fn worker_count_does_not_change_reports() {
    let one = Verifier {
        workers: Some(1),
        ..Verifier::default()
    }
    .verify_forest_extremal(9, 3)
    .unwrap();
    let four = Verifier {
        workers: Some(4),
        ..Verifier::default()
    }
    .verify_forest_extremal(9, 3)
    .unwrap();
    assert_eq!(one.to_json(), four.to_json());
    assert_eq!(one.to_csv(), four.to_csv());
    assert!(one.to_json().find("wall_time").is_none());
    let timed = Verifier {
        record_wall_time: true,
        ..Verifier::default()
    }
    .verify_forest_extremal(6, 2)
    .unwrap();
    assert!(timed.wall_time_ms.is_some());
}

#[test]
fn csv_layout() {
    let r = extremal::rank_structured(9, 1).unwrap();
    let csv = r.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("graph6,family,rho,residual"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn lemma_suites_hold() {
    let solver = Solver::default();
    let c = corpus(11, 200);
    assert!(lemmas::monotonicity(&solver, 11, 60, 10).unwrap().passed);
    let s = lemmas::sandwich(&solver, &c, 1e-8).unwrap();
    assert!(s.passed, "{:?}", s.failures);
    let o = lemmas::orbit_constancy(&solver, &c).unwrap();
    assert!(o.passed && o.cases > 20, "{o:?}");
    let sh = lemmas::shift_lemma(&solver, 7).unwrap();
    assert!(sh.passed && sh.cases > 100, "{sh:?}");
    assert!(lemmas::tree_chain(&solver, 5..=12).unwrap().passed);
    assert!(lemmas::exact_values(&solver, 30, 1e-9).unwrap().passed);
}
