//! Ranking candidate graphs by `ρ` and deciding strict comparisons.

use std::collections::HashMap;

use rayon::prelude::*;

use super::report::{Direction, RankedEntry, TieMember, TieResolution};
use crate::enumeration::{canonical_key, CanonicalKey, CANON_LIMIT};
use crate::error::Result;
use crate::exact::{compare_radii, ExactOrder};
use crate::family::FamilySpec;
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::metric::distances;
use crate::spectral::Solver;

/// Maps canonical keys of named constructions to their names.
#[derive(Clone, Debug, Default)]
pub struct Recognizer {
    names: HashMap<CanonicalKey, String>,
}

impl Recognizer {
    pub fn new<I, S>(named: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, FamilySpec)>,
        S: Into<String>,
    {
        let mut names = HashMap::new();
        for (name, spec) in named {
            let g = spec.construct()?;
            if g.order() <= CANON_LIMIT {
                names.entry(canonical_key(&g)?).or_insert_with(|| name.into());
            }
        }
        Ok(Recognizer { names })
    }

    /// Names each spec by its own grammar string.
    pub fn from_specs<I: IntoIterator<Item = FamilySpec>>(specs: I) -> Result<Self> {
        Self::new(specs.into_iter().map(|s| (s.to_string(), s)))
    }

    pub fn name(&self, key: &CanonicalKey) -> Option<&str> {
        self.names.get(key).map(String::as_str)
    }
}

/// Computes `ρ` for one graph, canonicalizing it when small enough.
pub fn evaluate(g: &Graph, solver: &Solver, recognizer: &Recognizer) -> Result<RankedEntry> {
    let (graph, key) = if g.order() <= CANON_LIMIT {
        let key = canonical_key(g)?;
        (crate::enumeration::canonical::decode(key.0, key.1), Some(key))
    } else {
        (g.clone(), None)
    };
    let r = solver.spectral_radius::<f64>(&graph)?;
    Ok(RankedEntry {
        graph6: to_graph6(&graph),
        family: key.and_then(|k| recognizer.name(&k).map(str::to_string)),
        order: graph.order(),
        size: graph.size(),
        rho: r.rho,
        residual: r.residual,
        key,
        graph,
    })
}

/// Evaluates every graph on the current rayon pool and sorts by `ρ` in the
/// requested direction, breaking exact float ties by canonical key.
pub fn rank<I>(graphs: I, solver: &Solver, recognizer: &Recognizer, direction: Direction) -> Result<Vec<RankedEntry>>
where
    I: Iterator<Item = Graph> + Send,
{
    let mut entries: Vec<RankedEntry> = graphs
        .par_bridge()
        .map(|g| evaluate(&g, solver, recognizer))
        .collect::<Result<_>>()?;
    sort_entries(&mut entries, direction);
    Ok(entries)
}

pub fn sort_entries(entries: &mut [RankedEntry], direction: Direction) {
    entries.sort_by(|a, b| {
        let by_rho = a.rho.total_cmp(&b.rho);
        let by_rho = match direction {
            Direction::Ascending => by_rho,
            Direction::Descending => by_rho.reverse(),
        };
        by_rho
            .then_with(|| a.key.cmp(&b.key))
            .then_with(|| a.graph6.cmp(&b.graph6))
    });
}

/// Float gap for two ranked entries: ten times the summed residuals, with a
/// floor of a few ulps of rounding in an order-`n` quadratic form.
pub fn gap_threshold(a: &RankedEntry, b: &RankedEntry) -> f64 {
    let n = a.order.max(b.order) as f64;
    let scale = a.rho.abs().max(b.rho.abs()).max(1.0);
    10.0 * (a.residual + b.residual) + 16.0 * n * f64::EPSILON * scale
}

/// Outcome of comparing `ρ(a)` with `ρ(b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub order: ExactOrder,
    /// Whether exact arithmetic was needed.
    pub exact: bool,
}

impl Verdict {
    pub fn is_greater(self) -> bool {
        self.order == ExactOrder::Greater
    }

    pub fn is_less(self) -> bool {
        self.order == ExactOrder::Less
    }
}

/// Decides `ρ(a)` versus `ρ(b)`: by floats when they differ by more than the
/// gap threshold, otherwise by the exact characteristic-polynomial certificates.
pub fn compare(a: &RankedEntry, b: &RankedEntry) -> Result<Verdict> {
    let diff = a.rho - b.rho;
    if diff.abs() > gap_threshold(a, b) {
        let order = if diff > 0.0 {
            ExactOrder::Greater
        } else {
            ExactOrder::Less
        };
        return Ok(Verdict { order, exact: false });
    }
    if a.key.is_some() && a.key == b.key {
        return Ok(Verdict {
            order: ExactOrder::Equal,
            exact: false,
        });
    }
    let da = distances(&a.graph)?;
    let db = distances(&b.graph)?;
    Ok(Verdict {
        order: compare_radii(&da, a.rho, &db, b.rho),
        exact: true,
    })
}

/// The winner plus everything not certified strictly worse than it, and the
/// number of exact comparisons spent.
pub fn tie_set(ranking: &[RankedEntry], direction: Direction) -> Result<(Vec<TieMember>, usize)> {
    let Some(first) = ranking.first() else {
        return Ok((Vec::new(), 0));
    };
    let mut members = vec![TieMember {
        graph6: first.graph6.clone(),
        rho: first.rho,
        resolution: TieResolution::Winner,
    }];
    let mut exact = 0;
    for e in &ranking[1..] {
        if (first.rho - e.rho).abs() > gap_threshold(first, e) {
            continue;
        }
        let v = compare(first, e)?;
        exact += usize::from(v.exact);
        let worse = match direction {
            Direction::Descending => v.is_greater(),
            Direction::Ascending => v.is_less(),
        };
        let resolution = match v.order {
            _ if worse => continue,
            ExactOrder::Equal => TieResolution::ExactTie,
            _ => TieResolution::Undecided,
        };
        members.push(TieMember {
            graph6: e.graph6.clone(),
            rho: e.rho,
            resolution,
        });
    }
    Ok((members, exact))
}

/// Checks that `head` is strictly better than every entry of `others` in
/// the given direction. Returns the first counterexample and the exact
/// comparison count.
pub fn strictly_beats<'a, I>(
    head: &RankedEntry,
    others: I,
    direction: Direction,
) -> Result<(Option<&'a RankedEntry>, usize)>
where
    I: IntoIterator<Item = &'a RankedEntry>,
{
    let mut exact = 0;
    for e in others {
        let v = compare(head, e)?;
        exact += usize::from(v.exact);
        let beats = match direction {
            Direction::Descending => v.is_greater(),
            Direction::Ascending => v.is_less(),
        };
        if !beats {
            return Ok((Some(e), exact));
        }
    }
    Ok((None, exact))
}
