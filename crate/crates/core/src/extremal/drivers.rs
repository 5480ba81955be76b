//! One driver per extremal claim. Each returns an [`ExtremalReport`] whose
//! audits record every checked inequality; `holds` is their conjunction.

use std::time::Instant;

use super::rank::{compare, evaluate, rank, sort_entries, strictly_beats, tie_set, Recognizer};
use super::report::{Audit, Direction, ExtremalReport, RankedEntry};
use super::{Verifier, EXHAUSTIVE_MAX_SIZE, EXHAUSTIVE_MIN_ORDER};
use crate::enumeration::{
    canonical_key, claim_one_bound, forest_profiles, prune_order_bound, structured_candidates, EnumScope,
};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::ComponentKind;

fn domain(family: &'static str, constraint: &str) -> Error {
    Error::Domain {
        family,
        constraint: constraint.to_string(),
    }
}

fn find<'a>(ranking: &'a [RankedEntry], spec: &FamilySpec) -> Result<Option<&'a RankedEntry>> {
    let g = spec.construct()?;
    let key = canonical_key(&g)?;
    Ok(ranking.iter().find(|e| e.key == Some(key)))
}

fn others<'a>(ranking: &'a [RankedEntry], skip: &[&RankedEntry]) -> impl Iterator<Item = &'a RankedEntry> + 'a {
    let skip: Vec<String> = skip.iter().map(|e| e.graph6.clone()).collect();
    ranking.iter().filter(move |e| !skip.contains(&e.graph6))
}

/// Audit that `head` strictly beats `rest`; a missing head fails the audit.
fn beats_audit<'a>(
    name: &str,
    head: Option<&RankedEntry>,
    rest: impl IntoIterator<Item = &'a RankedEntry>,
    direction: Direction,
    exact: &mut usize,
) -> Result<Audit> {
    let Some(head) = head else {
        return Ok(Audit::new(name, false, "graph not found among the candidates"));
    };
    let word = match direction {
        Direction::Descending => "above",
        Direction::Ascending => "below",
    };
    let (counter, used) = strictly_beats(head, rest, direction)?;
    *exact += used;
    Ok(match counter {
        None => Audit::new(
            name,
            true,
            format!("{} at {:.6} strictly {word} the rest", head.name(), head.rho),
        ),
        Some(e) => Audit::new(
            name,
            false,
            format!(
                "{} at {:.6} not strictly {word} {} at {:.6}",
                head.name(),
                head.rho,
                e.name(),
                e.rho
            ),
        )
        .with_witness(Some(e.graph6.clone())),
    })
}

fn claim_one_audit(m: usize, n: usize, reference: &RankedEntry) -> Audit {
    let bound = claim_one_bound(m, n + 1);
    let passed = bound > reference.rho + 1e-9 * reference.rho.max(1.0);
    Audit::new(
        "order restriction",
        passed,
        format!(
            "any connected graph with {m} edges and order ≥ {} has ρ ≥ {bound:.6} > ρ({}) = {:.6}",
            n + 1,
            reference.name(),
            reference.rho
        ),
    )
}

impl Verifier {
    fn report(
        &self,
        claim: String,
        scope: String,
        direction: Direction,
        ranking: Vec<RankedEntry>,
    ) -> Result<ExtremalReport> {
        let (tie, exact) = tie_set(&ranking, direction)?;
        let (solver_tolerance, tolerance_overridden) = self.tolerance();
        Ok(ExtremalReport {
            claim,
            scope,
            direction,
            candidates: ranking.len(),
            ranking,
            tie_set: tie,
            exact_comparisons: exact,
            audits: Vec::new(),
            holds: false,
            violation: None,
            solver_tolerance,
            tolerance_overridden,
            wall_time_ms: None,
        })
    }

    fn rank_scope(&self, scope: EnumScope, recognizer: &Recognizer, direction: Direction) -> Result<Vec<RankedEntry>> {
        self.install(|| rank(self.enumerator.enumerate(scope)?, &self.solver, recognizer, direction))
    }

    /// `P_{m+1}` is the unique maximum over connected graphs with `m` edges,
    /// `A_{m+1}` the unique second and `B_{m+1}` bounds everything else.
    pub fn verify_max_over_size(&self, m: usize) -> Result<ExtremalReport> {
        if m < 5 {
            return Err(domain("maximum over size", "m ≥ 5"));
        }
        let start = Instant::now();
        let n = m + 1;
        let (p, a, b) = (FamilySpec::Path(n), FamilySpec::ATree(n), FamilySpec::BTree(n));
        let claim = format!("max ρ over connected graphs with {m} edges: P_{n} > A_{n} > B_{n} ≥ rest");
        let exhaustive = m <= EXHAUSTIVE_MAX_SIZE;
        let mut exact = 0;
        let mut audits = Vec::new();
        let (mut report, pe, ae, be) = if exhaustive {
            let recognizer = Recognizer::from_specs([p.clone(), a.clone(), b.clone()])?;
            let ranking = self.rank_scope(EnumScope::BySize { m, max_n: None }, &recognizer, Direction::Descending)?;
            let report = self.report(
                claim,
                format!("BY_SIZE(m={m}), exhaustive over all orders"),
                Direction::Descending,
                ranking,
            )?;
            let r = &report.ranking;
            let (pe, ae, be) = (find(r, &p)?.cloned(), find(r, &a)?.cloned(), find(r, &b)?.cloned());
            if let (Some(pe), Some(ae), Some(be)) = (&pe, &ae, &be) {
                audits.push(beats_audit(
                    "path is the unique maximum",
                    Some(pe),
                    others(r, &[pe]),
                    Direction::Descending,
                    &mut exact,
                )?);
                audits.push(beats_audit(
                    "A-tree is the unique second",
                    Some(ae),
                    others(r, &[pe, ae]),
                    Direction::Descending,
                    &mut exact,
                )?);
                audits.push(beats_audit(
                    "B-tree bounds the rest",
                    Some(be),
                    others(r, &[pe, ae, be]),
                    Direction::Descending,
                    &mut exact,
                )?);
                let trees: Vec<&RankedEntry> = r.iter().filter(|e| e.order == n).collect();
                let rest = trees
                    .iter()
                    .copied()
                    .filter(|e| ![&pe.graph6, &ae.graph6, &be.graph6].contains(&&e.graph6));
                audits.push(beats_audit(
                    "tree ordering on the largest order",
                    Some(be),
                    rest,
                    Direction::Descending,
                    &mut exact,
                )?);
            } else {
                audits.push(Audit::new(
                    "path is the unique maximum",
                    false,
                    "a named tree is missing from the enumeration",
                ));
            }
            (report, pe, ae, be)
        } else {
            let recognizer = Recognizer::default();
            let mut ranking = Vec::new();
            for (label, spec) in [("path", &p), ("atree", &a), ("btree", &b)] {
                let mut e = evaluate(&spec.construct()?, &self.solver, &recognizer)?;
                e.family = Some(format!("{label}:{n}"));
                ranking.push(e);
            }
            sort_entries(&mut ranking, Direction::Descending);
            let report = self.report(
                claim,
                format!("m={m}, family-only comparison of the three trees"),
                Direction::Descending,
                ranking,
            )?;
            let get = |name: &str| {
                report
                    .ranking
                    .iter()
                    .find(|e| e.family.as_deref() == Some(name))
                    .cloned()
            };
            let (pe, ae, be) = (
                get(&format!("path:{n}")),
                get(&format!("atree:{n}")),
                get(&format!("btree:{n}")),
            );
            (report, pe, ae, be)
        };
        if let (Some(pe), Some(ae), Some(be)) = (&pe, &ae, &be) {
            let v1 = compare(pe, ae)?;
            let v2 = compare(ae, be)?;
            exact += usize::from(v1.exact) + usize::from(v2.exact);
            audits.push(
                Audit::new(
                    "strict chain",
                    v1.is_greater() && v2.is_greater(),
                    format!("ρ(P) = {:.6}, ρ(A) = {:.6}, ρ(B) = {:.6}", pe.rho, ae.rho, be.rho),
                )
                .with_witness(Some(if v1.is_greater() {
                    be.graph6.clone()
                } else {
                    ae.graph6.clone()
                })),
            );
            let shorter = evaluate(&FamilySpec::Path(m).construct()?, &self.solver, &Recognizer::default())?;
            let v = compare(be, &shorter)?;
            exact += usize::from(v.exact);
            audits.push(Audit::new(
                "shorter path below B-tree",
                v.is_greater(),
                format!("ρ(P_{m}) = {:.6} < ρ(B_{n}) = {:.6}", shorter.rho, be.rho),
            ));
        }
        report.exact_comparisons += exact;
        report.audits = audits;
        report.finish();
        self.timed(start, &mut report);
        Ok(report)
    }

    fn exhaustive_min(&self, m: usize, claim: String, n: usize) -> Result<ExtremalReport> {
        let limit = EXHAUSTIVE_MIN_ORDER.min(self.enumerator.limits.by_order_size_n);
        if n > limit {
            return Err(Error::ScopeLimit {
                what: "exhaustive minimizer order",
                limit,
                got: n,
            });
        }
        let s = prune_order_bound(m)?.s;
        let recognizer = Recognizer::from_specs([FamilySpec::Pnc { n, c: s + 1 }])?;
        let ranking = self.rank_scope(EnumScope::ByOrderSize { n, m }, &recognizer, Direction::Ascending)?;
        self.report(
            claim,
            format!("BY_ORDER_SIZE(n={n}, m={m}), exhaustive over connected graphs of order {n}"),
            Direction::Ascending,
            ranking,
        )
    }

    /// The minimizer over connected graphs with `m` edges has order `n` and the
    /// degree and complement structure of the clause selected by `s`.
    pub fn verify_min_structure(&self, m: usize) -> Result<ExtremalReport> {
        let start = Instant::now();
        let bound = prune_order_bound(m)?;
        let (n, s) = (bound.n, bound.s);
        let claim = format!("structure of the minimizer with m = {m} (n = {n}, s = {s})");
        let mut report = self.exhaustive_min(m, claim, n)?;
        let mut audits = Vec::new();
        if let Some(w) = report.winner() {
            audits.push(claim_one_audit(m, n, w));
        }
        let winners: Vec<RankedEntry> = report
            .tie_set
            .iter()
            .filter_map(|t| report.ranking.iter().find(|e| e.graph6 == t.graph6).cloned())
            .collect();
        for w in &winners {
            let g = &w.graph;
            let (dmax, dmin) = (g.max_degree(), g.min_degree());
            let audit = if 2 * s >= n - 1 {
                Audit::new("clause i", dmax == n - 1, format!("Δ = {dmax}, expected {}", n - 1))
            } else if 2 * s == n - 2 {
                Audit::new(
                    "clause ii",
                    dmax == n - 2 && dmin == n - 2,
                    format!("Δ = {dmax}, δ = {dmin}, expected both {}", n - 2),
                )
            } else {
                let st = g.complement().structure();
                let shapes_ok = st
                    .component_kinds
                    .iter()
                    .all(|k| matches!(k, ComponentKind::Cycle { .. }) || k.is_nontrivial_path());
                let paths = st.nontrivial_path_count();
                Audit::new(
                    "clause iii",
                    dmax == n - 2 && dmin + 3 == n && shapes_ok && paths == s + 1,
                    format!(
                        "Δ = {dmax}, δ = {dmin}, complement has {} cycle(s) and {paths} nontrivial path(s) (expected {}){}",
                        st.cycle_count(),
                        s + 1,
                        if shapes_ok { "" } else { ", plus other components" }
                    ),
                )
            };
            audits.push(audit.with_witness(Some(w.graph6.clone())));
        }
        audits.push(Audit::new(
            "minimizer found",
            !winners.is_empty(),
            format!("{} minimizer(s) in the tie set", winners.len()),
        ));
        report.audits = audits;
        report.finish();
        self.timed(start, &mut report);
        Ok(report)
    }

    /// `P_{n,s+1}` is the unique minimizer for `max(⌈(n−6)/2⌉, 1) ≤ s ≤ n−1`.
    ///
    /// Exhaustive up to [`EXHAUSTIVE_MIN_ORDER`]; beyond that, and only when
    /// `2s < n − 2`, the ranking covers the structured candidates.
    pub fn verify_min_identity(&self, m: usize) -> Result<ExtremalReport> {
        let start = Instant::now();
        let bound = prune_order_bound(m)?;
        let (n, s) = (bound.n, bound.s);
        let lo = n.saturating_sub(6).div_ceil(2).max(1);
        if s < lo {
            return Err(Error::OutsideRange(format!(
                "s = {s} is below max(⌈(n−6)/2⌉, 1) = {lo} for n = {n}; use conjecture_explore"
            )));
        }
        let claim = format!(
            "unique minimizer with m = {m} (n = {n}, s = {s}) is P_{{{n},{}}}",
            s + 1
        );
        let pnc = FamilySpec::Pnc { n, c: s + 1 };
        let exhaustive_limit = EXHAUSTIVE_MIN_ORDER.min(self.enumerator.limits.by_order_size_n);
        let mut report = if n <= exhaustive_limit {
            self.exhaustive_min(m, claim, n)?
        } else if 2 * s + 2 < n {
            let mut r = self.structured(n, s)?;
            r.claim = claim;
            r
        } else {
            return Err(Error::ScopeLimit {
                what: "exhaustive minimizer order",
                limit: exhaustive_limit,
                got: n,
            });
        };
        let mut exact = 0;
        let head = find(&report.ranking, &pnc)?.cloned();
        let rest: Vec<RankedEntry> = match &head {
            Some(h) => others(&report.ranking, &[h]).cloned().collect(),
            None => Vec::new(),
        };
        let mut audits = std::mem::take(&mut report.audits);
        audits.insert(
            0,
            beats_audit(
                "P_{n,s+1} is the unique minimizer",
                head.as_ref(),
                rest.iter(),
                Direction::Ascending,
                &mut exact,
            )?,
        );
        if let Some(h) = &head {
            audits.push(claim_one_audit(m, n, h));
        }
        audits.push(Audit::new(
            "range",
            true,
            format!(
                "⌈(n−6)/2⌉ = ⌊(n−5)/2⌋ = {} for n = {n}; s = {s}",
                n.saturating_sub(6).div_ceil(2)
            ),
        ));
        report.audits = audits;
        report.exact_comparisons += exact;
        report.finish();
        self.timed(start, &mut report);
        Ok(report)
    }

    /// Over complements of forests with `c` components on `n` vertices: the
    /// star complement is the unique maximum, the double-star complement the
    /// unique second and `P_{n,c}` the unique minimum.
    pub fn verify_forest_extremal(&self, n: usize, c: usize) -> Result<ExtremalReport> {
        if c < 2 || c + 2 > n {
            return Err(domain("forest complements", "2 ≤ c ≤ n − 2"));
        }
        let start = Instant::now();
        let star = FamilySpec::complement_with_isolated(vec![FamilySpec::Star(n - c + 1)], c - 1);
        let dstar = (n - c + 1 >= 4)
            .then(|| FamilySpec::complement_with_isolated(vec![FamilySpec::DoubleStar { n: n - c + 1, a: 1 }], c - 1));
        let pnc = FamilySpec::Pnc { n, c };
        let mut named = vec![star.clone(), pnc.clone()];
        named.extend(dstar.clone());
        let recognizer = Recognizer::from_specs(named)?;
        let scope = EnumScope::Forests { n, c };
        let ranking = self.install(|| {
            let stream = self.enumerator.enumerate(scope)?.map(|f| f.complement());
            rank(stream, &self.solver, &recognizer, Direction::Descending)
        })?;
        let mut report = self.report(
            format!("extremes over complements of {c}-component forests on {n} vertices"),
            format!("FORESTS(n={n}, c={c}), exhaustive, complemented"),
            Direction::Descending,
            ranking,
        )?;
        let r = &report.ranking;
        let mut exact = 0;
        let mut audits = Vec::new();
        let bad = r.iter().find(|e| !(e.graph.is_connected() && e.graph.diameter_le_2()));
        audits.push(
            Audit::new(
                "connected with diameter ≤ 2",
                bad.is_none(),
                format!("{} complement(s) checked", r.len()),
            )
            .with_witness(bad.map(|e| e.graph6.clone())),
        );
        let se = find(r, &star)?;
        let skip: Vec<&RankedEntry> = se.into_iter().collect();
        audits.push(beats_audit(
            "star complement is the unique maximum",
            se,
            others(r, &skip),
            Direction::Descending,
            &mut exact,
        )?);
        if let Some(d) = &dstar {
            let de = find(r, d)?;
            let mut skip = skip.clone();
            skip.extend(de);
            audits.push(beats_audit(
                "double-star complement is the unique second",
                de,
                others(r, &skip),
                Direction::Descending,
                &mut exact,
            )?);
        }
        let pe = find(r, &pnc)?;
        let skip: Vec<&RankedEntry> = pe.into_iter().collect();
        audits.push(beats_audit(
            "P_{n,c} is the unique minimum",
            pe,
            others(r, &skip),
            Direction::Ascending,
            &mut exact,
        )?);
        report.audits = audits;
        report.exact_comparisons += exact;
        report.finish();
        self.timed(start, &mut report);
        Ok(report)
    }

    fn structured(&self, n: usize, s: usize) -> Result<ExtremalReport> {
        let limit = self.enumerator.limits.structured_n;
        if n > limit {
            return Err(Error::ScopeLimit {
                what: "STRUCTURED_MIN n",
                limit,
                got: n,
            });
        }
        let candidates = structured_candidates(n, s)?;
        let recognizer = Recognizer::new(candidates.iter().map(|c| (c.label.clone(), c.spec.clone())))?;
        let graphs: Vec<_> = candidates.into_iter().map(|c| c.graph).collect();
        let ranking = self.install(|| rank(graphs.into_iter(), &self.solver, &recognizer, Direction::Ascending))?;
        let mut report = self.report(
            format!("structured candidates for n = {n}, s = {s}"),
            format!(
                "STRUCTURED_MIN(n={n}, s={s}): complements of cycles plus exactly {} nontrivial paths; linear forests represented by P_{{{n},{}}}",
                s + 1,
                s + 1
            ),
            Direction::Ascending,
            ranking,
        )?;
        let mut exact = 0;
        let mut audits = Vec::new();
        let label = format!("P_{{{n},{}}}", s + 1);
        let head = report
            .ranking
            .iter()
            .find(|e| e.family.as_deref() == Some(&label))
            .cloned();
        let rest: Vec<RankedEntry> = match &head {
            Some(h) => others(&report.ranking, &[h]).cloned().collect(),
            None => Vec::new(),
        };
        audits.push(beats_audit(
            "P_{n,s+1} is the unique structured minimum",
            head.as_ref(),
            rest.iter(),
            Direction::Ascending,
            &mut exact,
        )?);
        if let Some(h) = &head {
            let forest: Vec<RankedEntry> = forest_profiles(n, s)
                .into_iter()
                .map(|p| {
                    let mut e = evaluate(&p.spec().construct()?, &self.solver, &Recognizer::default())?;
                    e.family = Some(p.to_string());
                    Ok(e)
                })
                .collect::<Result<_>>()?;
            let rest: Vec<&RankedEntry> = forest.iter().filter(|e| e.key != h.key).collect();
            let mut audit = beats_audit(
                "linear forests reduce to P_{n,s+1}",
                Some(h),
                rest,
                Direction::Ascending,
                &mut exact,
            )?;
            audit.detail = format!("{} linear-forest complement(s): {}", forest.len(), audit.detail);
            audits.push(audit);
        }
        report.audits = audits;
        report.exact_comparisons += exact;
        Ok(report)
    }

    /// Ranks the structured candidates for any `(n, s)` with `2(s+1) ≤ n`.
    pub fn rank_structured(&self, n: usize, s: usize) -> Result<ExtremalReport> {
        let start = Instant::now();
        let mut report = self.structured(n, s)?;
        report.finish();
        self.timed(start, &mut report);
        Ok(report)
    }

    /// The structured search for `1 ≤ s ≤ (n−6)/2`, beyond the proven range.
    pub fn conjecture_explore(&self, m: usize) -> Result<ExtremalReport> {
        let start = Instant::now();
        let bound = prune_order_bound(m)?;
        let (n, s) = (bound.n, bound.s);
        if s == 0 || 2 * s + 6 > n {
            return Err(Error::OutsideRange(format!(
                "m = {m} gives n = {n}, s = {s}; the structured search needs 1 ≤ s ≤ (n−6)/2"
            )));
        }
        let mut report = self.structured(n, s)?;
        report.claim = format!(
            "conjectured minimizer with m = {m} (n = {n}, s = {s}) is P_{{{n},{}}}",
            s + 1
        );
        if let Some(h) = report
            .ranking
            .iter()
            .find(|e| e.family.as_deref() == Some(&format!("P_{{{n},{}}}", s + 1)))
        {
            let audit = claim_one_audit(m, n, h);
            report.audits.push(audit);
        }
        report.finish();
        self.timed(start, &mut report);
        Ok(report)
    }

    /// The two tables of structured candidates: `m = 29` and `m = 37`.
    pub fn tables(&self) -> Result<[ExtremalReport; 2]> {
        Ok([self.conjecture_explore(29)?, self.conjecture_explore(37)?])
    }
}

pub fn verify_max_over_size(m: usize) -> Result<ExtremalReport> {
    Verifier::default().verify_max_over_size(m)
}

pub fn verify_min_structure(m: usize) -> Result<ExtremalReport> {
    Verifier::default().verify_min_structure(m)
}

pub fn verify_min_identity(m: usize) -> Result<ExtremalReport> {
    Verifier::default().verify_min_identity(m)
}

pub fn verify_forest_extremal(n: usize, c: usize) -> Result<ExtremalReport> {
    Verifier::default().verify_forest_extremal(n, c)
}

pub fn rank_structured(n: usize, s: usize) -> Result<ExtremalReport> {
    Verifier::default().rank_structured(n, s)
}

pub fn conjecture_explore(m: usize) -> Result<ExtremalReport> {
    Verifier::default().conjecture_explore(m)
}

pub fn tables() -> Result<[ExtremalReport; 2]> {
    Verifier::default().tables()
}
