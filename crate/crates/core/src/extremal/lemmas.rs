//! Seeded property suites for the lemmas the extremal arguments rest on.

use serde::Serialize;

use super::rank::{compare, evaluate, Recognizer};
use crate::corpus::{graphs_with_non_edge, CorpusEntry};
use crate::enumeration::{canonical, enumerate, EnumScope};
use crate::error::Result;
use crate::family::FamilySpec;
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::metric::distances;
use crate::spectral::{perron_orbit_check, Solver};

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub cases: usize,
    /// One line per failing case, starting with the graph6 string.
    pub failures: Vec<String>,
    pub passed: bool,
}

impl PropertyReport {
    fn new(name: &str, cases: usize, failures: Vec<String>) -> Self {
        PropertyReport {
            name: name.to_string(),
            cases,
            passed: failures.is_empty(),
            failures,
        }
    }
}

/// Adding an edge strictly decreases `ρ`.
pub fn monotonicity(solver: &Solver, seed: u64, count: usize, max_n: usize) -> Result<PropertyReport> {
    let plain = Recognizer::default();
    let mut failures = Vec::new();
    for (g, (u, v)) in graphs_with_non_edge(seed, count, max_n) {
        let before = evaluate(&g, solver, &plain)?;
        let after = evaluate(&g.add_edge(u, v)?, solver, &plain)?;
        if !compare(&before, &after)?.is_greater() {
            failures.push(format!(
                "{} + {u}{v}: {:.12} vs {:.12}",
                to_graph6(&g),
                before.rho,
                after.rho
            ));
        }
    }
    Ok(PropertyReport::new("adding an edge decreases rho", count, failures))
}

/// `2W/n ≤ ρ ≤ Tr_max`, with equality in either place exactly for
/// transmission-regular graphs. `eq_tol` is the equality window.
pub fn sandwich(solver: &Solver, corpus: &[CorpusEntry], eq_tol: f64) -> Result<PropertyReport> {
    let mut failures = Vec::new();
    for e in corpus {
        let d = distances(&e.graph)?;
        let r = solver.perron_pair::<f64>(&d)?;
        let b = d.spectral_bounds::<f64>();
        let tr_min = d.tr_min() as f64;
        let slack = 1e-9 * r.rho.max(1.0);
        let inside = b.lower - slack <= r.rho && tr_min - slack <= r.rho && r.rho <= b.upper + slack;
        let touches = (r.rho - b.upper).abs() <= eq_tol || (r.rho - b.lower).abs() <= eq_tol;
        if !inside || touches != d.is_transmission_regular() {
            failures.push(format!(
                "{} ({}): {:.12} in [{:.12}, {:.12}], regular = {}",
                to_graph6(&e.graph),
                e.label,
                r.rho,
                b.lower,
                b.upper,
                d.is_transmission_regular()
            ));
        }
    }
    Ok(PropertyReport::new("transmission bounds", corpus.len(), failures))
}

/// Perron entries are constant on automorphism orbits. Only graphs with a
/// nontrivial automorphism count as cases.
pub fn orbit_constancy(solver: &Solver, corpus: &[CorpusEntry]) -> Result<PropertyReport> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for e in corpus {
        let cf = canonical(&e.graph)?;
        if !cf.has_nontrivial_automorphism() {
            continue;
        }
        cases += 1;
        let r = solver.spectral_radius::<f64>(&e.graph)?;
        if !perron_orbit_check(&e.graph, &r, &cf.orbits()) {
            failures.push(format!("{} ({})", to_graph6(&e.graph), e.label));
        }
    }
    Ok(PropertyReport::new(
        "perron entries constant on orbits",
        cases,
        failures,
    ))
}

/// Neighbour shifts from `u` to `v` with `x_u ≥ x_v` that keep diameter two
/// raise `ρ`; so does replacing a non-pendant tree edge `uv` of a forest by
/// `G(uv)` before complementing. Instances are the complements of all
/// forests with `2 ≤ c ≤ n − 2` components on `5 ≤ n ≤ max_n` vertices.
pub fn shift_lemma(solver: &Solver, max_n: usize) -> Result<PropertyReport> {
    let plain = Recognizer::default();
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 5..=max_n {
        for c in 2..=n - 2 {
            for forest in enumerate(EnumScope::Forests { n, c })? {
                let g = forest.complement();
                let base = evaluate(&g, solver, &plain)?;
                let x = solver.spectral_radius::<f64>(&g)?.perron;
                let mut check = |h: Graph, what: String| -> Result<()> {
                    cases += 1;
                    let shifted = evaluate(&h, solver, &plain)?;
                    if !compare(&shifted, &base)?.is_greater() {
                        failures.push(format!(
                            "{} {what}: {:.12} vs {:.12}",
                            to_graph6(&g),
                            shifted.rho,
                            base.rho
                        ));
                    }
                    Ok(())
                };
                for u in 0..n {
                    for v in 0..n {
                        if u == v || x[u] < x[v] {
                            continue;
                        }
                        let s: Vec<usize> = g.neighbors(u).filter(|&w| w != v && !g.has_edge(v, w)).collect();
                        if s.is_empty() {
                            continue;
                        }
                        let mut sets = vec![s.clone()];
                        if s.len() > 1 {
                            sets.extend(s.iter().map(|&w| vec![w]));
                        }
                        for set in sets {
                            let h = g.shift_neighbors(u, v, &set)?;
                            if h.is_connected() && h.diameter_le_2() {
                                check(h, format!("shift {set:?} from {u} to {v}"))?;
                            }
                        }
                    }
                }
                for (u, v) in forest.edges() {
                    if forest.degree(u) > 1 && forest.degree(v) > 1 {
                        check(forest.identify_with_pendant(u, v)?.complement(), format!("G({u}{v})"))?;
                    }
                }
            }
        }
    }
    Ok(PropertyReport::new("neighbour shifts raise rho", cases, failures))
}

/// `ρ(P_m) < ρ(B_{m+1}) < ρ(A_{m+1}) < ρ(P_{m+1})` for each `m` in range.
pub fn tree_chain(solver: &Solver, sizes: std::ops::RangeInclusive<usize>) -> Result<PropertyReport> {
    let plain = Recognizer::default();
    let mut failures = Vec::new();
    let mut cases = 0;
    for m in sizes {
        cases += 1;
        let n = m + 1;
        let get = |s: FamilySpec| -> Result<_> { evaluate(&s.construct()?, solver, &plain) };
        let chain = [
            get(FamilySpec::Path(m))?,
            get(FamilySpec::BTree(n))?,
            get(FamilySpec::ATree(n))?,
            get(FamilySpec::Path(n))?,
        ];
        for w in chain.windows(2) {
            if !compare(&w[1], &w[0])?.is_greater() {
                failures.push(format!("m = {m}: {:.12} !< {:.12}", w[0].rho, w[1].rho));
            }
        }
    }
    Ok(PropertyReport::new("tree chain", cases, failures))
}

/// `ρ(K_n) = n − 1` and `ρ(C_n) = Tr(C_n)` within `tol`.
pub fn exact_values(solver: &Solver, max_n: usize, tol: f64) -> Result<PropertyReport> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=max_n {
        let k = FamilySpec::Complete(n).construct()?;
        let rho = solver.spectral_radius::<f64>(&k)?.rho;
        cases += 1;
        if (rho - (n as f64 - 1.0)).abs() > tol {
            failures.push(format!("K_{n}: {rho}"));
        }
        if n >= 3 {
            let c = FamilySpec::Cycle(n).construct()?;
            let tr = distances(&c)?.tr_max() as f64;
            let rho = solver.spectral_radius::<f64>(&c)?.rho;
            cases += 1;
            if (rho - tr).abs() > tol {
                failures.push(format!("C_{n}: {rho} vs {tr}"));
            }
        }
    }
    Ok(PropertyReport::new("exact values", cases, failures))
}
