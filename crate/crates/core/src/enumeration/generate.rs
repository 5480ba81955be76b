//! Isomorph-free generation by levelwise augmentation.
//!
//! Each level holds one canonical code per isomorphism class. The next level
//! is obtained by applying every admissible augmentation to every class,
//! canonicalizing the results and deduplicating. Expansion of a level is
//! spread over the rayon pool; the level itself is kept sorted, so the output
//! order does not depend on the number of workers.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use super::canonical::{canonical_key, decode, CanonicalKey};
use super::structured::structured_candidates;
use crate::error::{Error, Result};
use crate::format::{from_graph6, to_graph6};
use crate::graph::Graph;

/// What to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EnumScope {
    /// Connected graphs with `m` edges, of every order up to `max_n`.
    BySize { m: usize, max_n: Option<usize> },
    /// Connected graphs with `n` vertices and `m` edges.
    ByOrderSize { n: usize, m: usize },
    /// Forests on `n` vertices with exactly `c` components.
    Forests { n: usize, c: usize },
    /// Complements of unions of cycles and exactly `s + 1` nontrivial paths
    /// on `n` vertices, with all forest complements represented by `P_{n,s+1}`.
    StructuredMin { n: usize, s: usize },
}

impl EnumScope {
    /// Stable name used for cache files and report headers.
    pub fn slug(&self) -> String {
        match *self {
            EnumScope::BySize { m, max_n: None } => format!("by_size_m{m}"),
            EnumScope::BySize { m, max_n: Some(k) } => format!("by_size_m{m}_maxn{k}"),
            EnumScope::ByOrderSize { n, m } => format!("by_order_size_n{n}_m{m}"),
            EnumScope::Forests { n, c } => format!("forests_n{n}_c{c}"),
            EnumScope::StructuredMin { n, s } => format!("structured_min_n{n}_s{s}"),
        }
    }
}

/// Per-mode ceilings; never above [`EnumLimits::HARD`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumLimits {
    pub by_size_m: usize,
    pub by_order_size_n: usize,
    pub forests_n: usize,
    pub structured_n: usize,
}

impl EnumLimits {
    pub const HARD: EnumLimits = EnumLimits {
        by_size_m: 10,
        by_order_size_n: 10,
        forests_n: 12,
        structured_n: 14,
    };

    pub fn new(by_size_m: usize, by_order_size_n: usize, forests_n: usize, structured_n: usize) -> Result<Self> {
        let h = Self::HARD;
        let checks = [
            ("BY_SIZE m", by_size_m, h.by_size_m),
            ("BY_ORDER_SIZE n", by_order_size_n, h.by_order_size_n),
            ("FORESTS n", forests_n, h.forests_n),
            ("STRUCTURED_MIN n", structured_n, h.structured_n),
        ];
        for (what, got, limit) in checks {
            if got > limit {
                return Err(Error::ScopeLimit { what, limit, got });
            }
        }
        Ok(EnumLimits {
            by_size_m,
            by_order_size_n,
            forests_n,
            structured_n,
        })
    }

    pub fn check(&self, scope: &EnumScope) -> Result<()> {
        let (what, got, limit) = match *scope {
            EnumScope::BySize { m, .. } => ("BY_SIZE m", m, self.by_size_m),
            EnumScope::ByOrderSize { n, .. } => ("BY_ORDER_SIZE n", n, self.by_order_size_n),
            EnumScope::Forests { n, .. } => ("FORESTS n", n, self.forests_n),
            EnumScope::StructuredMin { n, .. } => ("STRUCTURED_MIN n", n, self.structured_n),
        };
        if got > limit {
            return Err(Error::ScopeLimit { what, limit, got });
        }
        Ok(())
    }
}

impl Default for EnumLimits {
    fn default() -> Self {
        Self::HARD
    }
}

pub type GraphStream = Box<dyn Iterator<Item = Graph> + Send>;

/// Enumerator with limits and an optional on-disk cache.
#[derive(Clone, Debug, Default)]
pub struct Enumerator {
    pub limits: EnumLimits,
    pub cache_dir: Option<PathBuf>,
}

impl Enumerator {
    pub fn new(limits: EnumLimits, cache_dir: Option<PathBuf>) -> Self {
        Enumerator { limits, cache_dir }
    }

    /// Streams one graph per isomorphism class in scope, in canonical form,
    /// sorted by canonical key.
    pub fn enumerate(&self, scope: EnumScope) -> Result<GraphStream> {
        self.limits.check(&scope)?;
        validate(&scope)?;
        if let EnumScope::StructuredMin { n, s } = scope {
            let graphs: Vec<Graph> = structured_candidates(n, s)?.into_iter().map(|c| c.graph).collect();
            return Ok(Box::new(graphs.into_iter()));
        }
        if let Some(dir) = &self.cache_dir {
            let path = dir.join(format!("{}.g6", scope.slug()));
            if path.exists() {
                return read_cache(&path);
            }
            let keys = generate_keys(&scope)?;
            write_cache(&path, &keys)?;
            return Ok(stream(keys));
        }
        Ok(stream(generate_keys(&scope)?))
    }
}

/// [`Enumerator::enumerate`] with hard limits and no cache.
pub fn enumerate(scope: EnumScope) -> Result<GraphStream> {
    Enumerator::default().enumerate(scope)
}

fn stream(keys: Vec<CanonicalKey>) -> GraphStream {
    Box::new(keys.into_iter().map(|(n, code)| decode(n, code)))
}

fn read_cache(path: &Path) -> Result<GraphStream> {
    let file = fs::File::open(path)?;
    let mut graphs = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        if !line.trim().is_empty() {
            graphs.push(from_graph6(&line)?);
        }
    }
    Ok(Box::new(graphs.into_iter()))
}

fn write_cache(path: &Path, keys: &[CanonicalKey]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("g6.tmp");
    let mut w = BufWriter::new(fs::File::create(&tmp)?);
    for &(n, code) in keys {
        writeln!(w, "{}", to_graph6(&decode(n, code)))?;
    }
    w.flush()?;
    drop(w);
    fs::rename(&tmp, path)?;
    Ok(())
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn validate(scope: &EnumScope) -> Result<()> {
    let bad = |family, constraint: &str| {
        Err(Error::Domain {
            family,
            constraint: constraint.to_string(),
        })
    };
    match *scope {
        EnumScope::BySize { m, max_n } => {
            if m == 0 {
                return bad("BY_SIZE", "m ≥ 1");
            }
            if max_n.is_some_and(|k| k < 2) {
                return bad("BY_SIZE", "max_n ≥ 2");
            }
        }
        EnumScope::ByOrderSize { n, m } => {
            if n == 0 || m > pairs(n) {
                return bad("BY_ORDER_SIZE", "n ≥ 1 and m ≤ C(n, 2)");
            }
        }
        EnumScope::Forests { n, c } => {
            if c == 0 || c > n {
                return bad("FORESTS", "1 ≤ c ≤ n");
            }
        }
        EnumScope::StructuredMin { n, s } => {
            if s == 0 || 2 * (s + 1) > n {
                return bad("STRUCTURED_MIN", "s ≥ 1 and 2(s + 1) ≤ n");
            }
        }
    }
    Ok(())
}

fn generate_keys(scope: &EnumScope) -> Result<Vec<CanonicalKey>> {
    match *scope {
        EnumScope::BySize { m, max_n } => by_size(m, max_n.unwrap_or(m + 1)),
        EnumScope::ByOrderSize { n, m } => by_order_size(n, m),
        EnumScope::Forests { n, c } => forests(n, c),
        EnumScope::StructuredMin { .. } => unreachable!("structured scope is built directly"),
    }
}

/// One augmentation step: expand every class, canonicalize and deduplicate.
fn step<F>(level: &[CanonicalKey], children: F) -> Result<Vec<CanonicalKey>>
where
    F: Fn(&Graph) -> Vec<Graph> + Sync,
{
    let expanded: Result<Vec<Vec<CanonicalKey>>> = level
        .par_iter()
        .map(|&(n, code)| {
            let mut keys: Vec<CanonicalKey> = children(&decode(n, code))
                .iter()
                .map(canonical_key)
                .collect::<Result<_>>()?;
            keys.sort_unstable();
            keys.dedup();
            Ok(keys)
        })
        .collect();
    let mut next: Vec<CanonicalKey> = expanded?.into_iter().flatten().collect();
    next.par_sort_unstable();
    next.dedup();
    Ok(next)
}

fn with_edge(g: &Graph, u: usize, v: usize) -> Graph {
    g.add_edge(u, v).expect("augmenting pair is a non-edge")
}

/// All graphs on `n` vertices with `m` edges, any connectivity.
fn all_by_order_size(n: usize, m: usize) -> Result<Vec<CanonicalKey>> {
    let mut level = vec![canonical_key(&Graph::empty(n)?)?];
    for _ in 0..m {
        level = step(&level, |g| g.non_edges().map(|(u, v)| with_edge(g, u, v)).collect())?;
    }
    Ok(level)
}

fn by_order_size(n: usize, m: usize) -> Result<Vec<CanonicalKey>> {
    let total = pairs(n);
    let raw = if m > total / 2 {
        let complements = all_by_order_size(n, total - m)?;
        let mut keys: Vec<CanonicalKey> = complements
            .par_iter()
            .map(|&(n, code)| canonical_key(&decode(n, code).complement()))
            .collect::<Result<_>>()?;
        keys.sort_unstable();
        keys
    } else {
        all_by_order_size(n, m)?
    };
    Ok(raw
        .into_iter()
        .filter(|&(n, code)| decode(n, code).is_connected())
        .collect())
}

/// Connected graphs grow one edge at a time from `P_2` by adding a chord or
/// a pendant vertex; every connected graph with at least two edges has an
/// edge whose removal (with its endpoint, when that endpoint is a leaf)
/// leaves a connected graph, so every class is reached.
fn by_size(m: usize, max_n: usize) -> Result<Vec<CanonicalKey>> {
    let mut level = vec![canonical_key(&Graph::complete(2)?)?];
    for _ in 1..m {
        level = step(&level, |g| {
            let n = g.order();
            let mut out: Vec<Graph> = g.non_edges().map(|(u, v)| with_edge(g, u, v)).collect();
            if n < max_n {
                let edges: Vec<(usize, usize)> = g.edges().collect();
                for v in 0..n {
                    let grown = Graph::from_edges(n + 1, edges.iter().copied().chain([(v, n)]));
                    out.push(grown.expect("pendant extension is simple"));
                }
            }
            out
        })?;
    }
    Ok(level.into_iter().filter(|&(n, _)| n <= max_n).collect())
}

fn forests(n: usize, c: usize) -> Result<Vec<CanonicalKey>> {
    let mut level = vec![canonical_key(&Graph::empty(n)?)?];
    for _ in 0..n - c {
        level = step(&level, |g| {
            let comps = g.components();
            let mut label = vec![0; g.order()];
            for (i, comp) in comps.iter().enumerate() {
                for &v in comp {
                    label[v] = i;
                }
            }
            g.non_edges()
                .filter(|&(u, v)| label[u] != label[v])
                .map(|(u, v)| with_edge(g, u, v))
                .collect()
        })?;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(scope: EnumScope) -> usize {
        enumerate(scope).unwrap().count()
    }

    #[test]
    fn small_sizes() {
        assert_eq!(count(EnumScope::BySize { m: 1, max_n: None }), 1);
        assert_eq!(count(EnumScope::BySize { m: 2, max_n: None }), 1);
        assert_eq!(count(EnumScope::BySize { m: 3, max_n: None }), 3);
        assert_eq!(count(EnumScope::BySize { m: 3, max_n: Some(3) }), 1);
    }

    #[test]
    fn limits_are_enforced() {
        let err = enumerate(EnumScope::BySize { m: 11, max_n: None }).err().unwrap();
        assert!(matches!(err, Error::ScopeLimit { limit: 10, got: 11, .. }));
        assert!(EnumLimits::new(11, 10, 12, 14).is_err());
        let tight = Enumerator::new(EnumLimits::new(5, 6, 7, 8).unwrap(), None);
        assert!(tight.enumerate(EnumScope::Forests { n: 8, c: 2 }).is_err());
        assert!(enumerate(EnumScope::ByOrderSize { n: 4, m: 7 }).is_err());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let e = Enumerator::new(EnumLimits::HARD, Some(dir.path().to_path_buf()));
        let scope = EnumScope::Forests { n: 7, c: 2 };
        let first: Vec<Graph> = e.enumerate(scope).unwrap().collect();
        assert!(dir.path().join("forests_n7_c2.g6").exists());
        let second: Vec<Graph> = e.enumerate(scope).unwrap().collect();
        assert_eq!(first, second);
    }
}
