//! Candidates for the minimum at `m = C(n−1, 2) + s` with small `s`:
//! complements of disjoint unions of cycles and exactly `s + 1` nontrivial
//! paths, together with the order bound that confines the search to order `n`.

use std::fmt;

use serde::Serialize;

use super::canonical::canonical_graph;
use crate::error::{Error, Result};
use crate::family::{order_for_size, FamilySpec};
use crate::graph::Graph;

/// Component orders of the complement, each list non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComplementProfile {
    pub cycles: Vec<usize>,
    pub paths: Vec<usize>,
}

impl ComplementProfile {
    pub fn order(&self) -> usize {
        self.cycles.iter().sum::<usize>() + self.paths.iter().sum::<usize>()
    }

    pub fn spec(&self) -> FamilySpec {
        let parts = self
            .cycles
            .iter()
            .map(|&k| FamilySpec::Cycle(k))
            .chain(self.paths.iter().map(|&k| FamilySpec::Path(k)))
            .collect();
        FamilySpec::complement_of(FamilySpec::UnionOf(parts))
    }
}

fn push_runs(out: &mut Vec<String>, letter: &str, orders: &[usize]) {
    let mut i = 0;
    while i < orders.len() {
        let k = orders[i];
        let run = orders[i..].iter().take_while(|&&x| x == k).count();
        let name = if letter == "P" && k == 2 {
            "K".to_string()
        } else {
            letter.to_string()
        };
        out.push(if run > 1 {
            format!("{run}{name}{k}")
        } else {
            format!("{name}{k}")
        });
        i += run;
    }
}

/// `complement(C5 ∪ 2K2)`, with `P2` written `K2`.
impl fmt::Display for ComplementProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        push_runs(&mut parts, "C", &self.cycles);
        push_runs(&mut parts, "P", &self.paths);
        write!(f, "complement({})", parts.join(" ∪ "))
    }
}

/// Partitions of `total` into exactly `k` parts, each at least `min`,
/// non-increasing, in lexicographically decreasing order.
fn partitions_exact(total: usize, k: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, k: usize, min: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if total < k * min {
            return;
        }
        let hi = max.min(total - (k - 1) * min);
        for part in (min..=hi).rev() {
            cur.push(part);
            go(total - part, k - 1, min, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, k, min, total, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `total` into any number of parts, each at least `min`.
fn partitions_any(total: usize, min: usize) -> Vec<Vec<usize>> {
    (1..=total / min.max(1))
        .flat_map(|k| partitions_exact(total, k, min))
        .collect()
}

/// Every profile on `n` vertices with exactly `s + 1` nontrivial paths and
/// cycles of any number (possibly none), ordered by decreasing cycle total.
pub fn all_profiles(n: usize, s: usize) -> Vec<ComplementProfile> {
    let k = s + 1;
    let mut out = Vec::new();
    if n < 2 * k {
        return out;
    }
    for cycle_total in (0..=n - 2 * k).rev() {
        if cycle_total == 1 || cycle_total == 2 {
            continue;
        }
        let cycle_sets = if cycle_total == 0 {
            vec![Vec::new()]
        } else {
            partitions_any(cycle_total, 3)
        };
        let path_sets = partitions_exact(n - cycle_total, k, 2);
        for cycles in &cycle_sets {
            for paths in &path_sets {
                out.push(ComplementProfile {
                    cycles: cycles.clone(),
                    paths: paths.clone(),
                });
            }
        }
    }
    out
}

/// Profiles without cycles, i.e. complements of linear forests.
pub fn forest_profiles(n: usize, s: usize) -> Vec<ComplementProfile> {
    all_profiles(n, s).into_iter().filter(|p| p.cycles.is_empty()).collect()
}

/// One candidate of the structured search.
#[derive(Clone, Debug)]
pub struct StructuredCandidate {
    /// `None` for the `P_{n,s+1}` representative of the forest complements.
    pub profile: Option<ComplementProfile>,
    pub label: String,
    pub spec: FamilySpec,
    /// Canonically labeled.
    pub graph: Graph,
}

/// `P_{n,s+1}` followed by every profile with at least one cycle.
///
/// Complements of linear forests with `s + 1` components all reduce to
/// `P_{n,s+1}`, the minimum among them, so only that one is listed.
pub fn structured_candidates(n: usize, s: usize) -> Result<Vec<StructuredCandidate>> {
    if s == 0 || 2 * (s + 1) > n {
        return Err(Error::Domain {
            family: "STRUCTURED_MIN",
            constraint: "s ≥ 1 and 2(s + 1) ≤ n".into(),
        });
    }
    let pnc = FamilySpec::Pnc { n, c: s + 1 };
    let mut out = vec![StructuredCandidate {
        profile: None,
        label: format!("P_{{{n},{}}}", s + 1),
        graph: canonical_graph(&pnc.construct()?)?,
        spec: pnc,
    }];
    for p in all_profiles(n, s).into_iter().filter(|p| !p.cycles.is_empty()) {
        let spec = p.spec();
        out.push(StructuredCandidate {
            label: p.to_string(),
            graph: canonical_graph(&spec.construct()?)?,
            spec,
            profile: Some(p),
        });
    }
    Ok(out)
}

/// Order forced on a minimizer with `m` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderBound {
    pub m: usize,
    /// Unique `n` with `C(n−1, 2) < m ≤ C(n, 2)`.
    pub n: usize,
    /// `m − C(n−1, 2)`, in `1..=n−1`.
    pub s: usize,
}

pub fn prune_order_bound(m: usize) -> Result<OrderBound> {
    if m == 0 {
        return Err(Error::Domain {
            family: "order bound",
            constraint: "m ≥ 1".into(),
        });
    }
    let (n, s) = order_for_size(m);
    Ok(OrderBound { m, n, s })
}

/// Lower bound `2(n_G − 1) − 2m/n_G` on `ρ` of any connected graph of order
/// `n_G` with `m` edges, from `ρ ≥ 2W/n_G` and `W ≥ 2C(n_G, 2) − m`.
pub fn claim_one_bound(m: usize, order: usize) -> f64 {
    let ng = order as f64;
    2.0 * (ng - 1.0) - 2.0 * m as f64 / ng
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_exact(7, 2, 2), vec![vec![5, 2], vec![4, 3]]);
        assert_eq!(partitions_any(6, 3), vec![vec![6], vec![3, 3]]);
        assert!(partitions_any(2, 3).is_empty());
    }

    #[test]
    fn table_sizes() {
        assert_eq!(structured_candidates(9, 1).unwrap().len(), 5);
        assert_eq!(structured_candidates(10, 1).unwrap().len(), 8);
        assert_eq!(forest_profiles(9, 1).len(), 3);
    }

    #[test]
    fn labels() {
        let labels: Vec<String> = structured_candidates(10, 1)
            .unwrap()
            .into_iter()
            .map(|c| c.label)
            .collect();
        assert!(labels.contains(&"complement(2C3 ∪ 2K2)".to_string()));
        assert!(labels.contains(&"complement(C3 ∪ P5 ∪ K2)".to_string()));
        assert_eq!(labels[0], "P_{10,2}");
    }

    #[test]
    fn order_bound_examples() {
        assert_eq!(prune_order_bound(29).unwrap(), OrderBound { m: 29, n: 9, s: 1 });
        assert_eq!(prune_order_bound(37).unwrap(), OrderBound { m: 37, n: 10, s: 1 });
        for n in 3..20 {
            assert_eq!(prune_order_bound(n * (n - 1) / 2).unwrap().s, n - 1);
        }
        assert!(prune_order_bound(0).is_err());
        assert_eq!(claim_one_bound(29, 10), 18.0 - 5.8);
    }
}
