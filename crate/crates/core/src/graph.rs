//! Immutable simple undirected graphs stored as adjacency bit rows.
//!
//! Row `v` occupies `stride = ⌈n/64⌉` words; for `n ≤ 64` every row is a
//! single `u64`, which is the representation the enumeration hot path runs
//! on. Larger orders (up to [`MAX_ORDER`]) use the same layout with more
//! words per row.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order any [`Graph`] may have.
pub const MAX_ORDER: usize = 512;

/// Largest order stored with single-word rows.
pub const BITROW_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    m: usize,
}

/// Shape of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    /// A path on `order` vertices; `K_1` is the path of order one.
    Path {
        order: usize,
    },
    Cycle {
        order: usize,
    },
    Other {
        order: usize,
    },
}

impl ComponentKind {
    pub fn order(self) -> usize {
        match self {
            ComponentKind::Path { order } | ComponentKind::Cycle { order } | ComponentKind::Other { order } => order,
        }
    }

    pub fn is_nontrivial_path(self) -> bool {
        matches!(self, ComponentKind::Path { order } if order >= 2)
    }
}

/// Answers to the structural questions asked about extremal graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub is_connected: bool,
    pub diameter_le_2: bool,
    pub max_degree: usize,
    pub min_degree: usize,
    /// Vertex sets of the components, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub component_kinds: Vec<ComponentKind>,
}

impl Structure {
    pub fn nontrivial_path_count(&self) -> usize {
        self.component_kinds.iter().filter(|k| k.is_nontrivial_path()).count()
    }

    pub fn cycle_count(&self) -> usize {
        self.component_kinds
            .iter()
            .filter(|k| matches!(k, ComponentKind::Cycle { .. }))
            .count()
    }
}

fn stride_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { n, max: MAX_ORDER });
        }
        let stride = stride_for(n);
        Ok(Graph {
            n,
            stride,
            rows: vec![0; n * stride],
            m: 0,
        })
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds an order-`n ≤ 64` graph from symmetric single-word rows.
    pub(crate) fn from_row_words(n: usize, rows: &[u64]) -> Graph {
        debug_assert!(n <= BITROW_ORDER && rows.len() == n);
        debug_assert!((0..n).all(|u| rows[u] >> u & 1 == 0));
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph {
            n,
            stride: 1,
            rows: rows.to_vec(),
            m,
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
        self.m += 1;
    }

    #[inline]
    fn clear(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.stride + u / 64] &= !(1 << (u % 64));
        self.m -= 1;
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    /// Words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Adjacency row as a single word. Only meaningful for `n ≤ 64`.
    #[inline]
    pub fn row_word(&self, v: usize) -> u64 {
        debug_assert!(self.n <= BITROW_ORDER);
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `g + uv`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    /// `g − uv`.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.clear(u, v);
        Ok(g)
    }

    /// Non-edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for u in 0..self.n {
            let row = &mut g.rows[u * self.stride..(u + 1) * self.stride];
            for (w, word) in row.iter_mut().enumerate() {
                *word = !*word & valid_mask(self.n, w);
            }
            row[u / 64] &= !(1 << (u % 64));
        }
        g.m = self.n * (self.n - 1) / 2 - self.m;
        g
    }

    /// Disjoint union; vertex blocks are concatenated in the order given.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::Domain {
                family: "union",
                constraint: "at least one part".into(),
            });
        }
        let n: usize = parts.iter().map(Graph::order).sum();
        let mut g = Graph::empty(n)?;
        let mut offset = 0;
        for p in parts {
            for (u, v) in p.edges() {
                g.set(offset + u, offset + v);
            }
            offset += p.order();
        }
        Ok(g)
    }

    /// `self ∨ other`: disjoint union plus every edge between the two blocks.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::disjoint_union(&[self.clone(), other.clone()])?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g
    }

    /// `G(uv)`: identify `v` into `u`, then re-attach `v` as a pendant of `u`.
    ///
    /// The edge count drops by `|N(u) ∩ N(v)|`, so it is preserved exactly
    /// when `u` and `v` have no common neighbour (always true in a forest).
    pub fn identify_with_pendant(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        if self.degree(u) == 1 || self.degree(v) == 1 {
            return Err(Error::PendantEdge(u, v));
        }
        let mut g = Graph::empty(self.n)?;
        for (a, b) in self.edges() {
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            if a != b && !g.has_edge(a, b) {
                g.set(a, b);
            }
        }
        g.set(u, v);
        Ok(g)
    }

    /// `G − {uw : w ∈ S} + {vw : w ∈ S}` for `∅ ≠ S ⊆ N(u) \ ({v} ∪ N(v))`.
    pub fn shift_neighbors(&self, u: usize, v: usize, set: &[usize]) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidShift("u and v must differ".into()));
        }
        if set.is_empty() {
            return Err(Error::InvalidShift("S must be nonempty".into()));
        }
        let mut g = self.clone();
        for &w in set {
            self.check_vertex(w)?;
            if w == v || !self.has_edge(u, w) || self.has_edge(v, w) {
                return Err(Error::InvalidShift(format!(
                    "{w} is not in N({u}) \\ ({{{v}}} ∪ N({v}))"
                )));
            }
            if !g.has_edge(u, w) {
                return Err(Error::InvalidShift(format!("{w} repeated in S")));
            }
            g.clear(u, w);
            g.set(v, w);
        }
        Ok(g)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= BITROW_ORDER {
            let all = valid_mask(self.n, 0);
            let mut reach = 1u64;
            loop {
                let mut next = reach;
                for v in bits(&[reach]) {
                    next |= self.rows[v];
                }
                if next == reach {
                    return reach == all;
                }
                reach = next;
            }
        }
        self.components().len() == 1
    }

    /// True when every pair of vertices is at distance at most two.
    pub fn diameter_le_2(&self) -> bool {
        let mut ball = vec![0u64; self.stride];
        for v in 0..self.n {
            ball.copy_from_slice(self.row(v));
            ball[v / 64] |= 1 << (v % 64);
            for w in self.neighbors(v) {
                for (b, r) in ball.iter_mut().zip(self.row(w)) {
                    *b |= r;
                }
            }
            if ball.iter().enumerate().any(|(i, &b)| b != valid_mask(self.n, i)) {
                return false;
            }
        }
        true
    }

    fn component_kind(&self, comp: &[usize]) -> ComponentKind {
        let order = comp.len();
        let degs: Vec<usize> = comp.iter().map(|&v| self.degree(v)).collect();
        let edges = degs.iter().sum::<usize>() / 2;
        let max = degs.iter().copied().max().unwrap_or(0);
        if edges + 1 == order && max <= 2 {
            ComponentKind::Path { order }
        } else if edges == order && order >= 3 && degs.iter().all(|&d| d == 2) {
            ComponentKind::Cycle { order }
        } else {
            ComponentKind::Other { order }
        }
    }

    pub fn structure(&self) -> Structure {
        let components = self.components();
        let component_kinds = components.iter().map(|c| self.component_kind(c)).collect();
        Structure {
            is_connected: components.len() == 1,
            diameter_le_2: self.diameter_le_2(),
            max_degree: self.max_degree(),
            min_degree: self.min_degree(),
            components,
            component_kinds,
        }
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Mask of the valid bit positions in word `w` of a row of an order-`n` graph.
#[inline]
pub(crate) fn valid_mask(n: usize, w: usize) -> u64 {
    let lo = w * 64;
    if n >= lo + 64 {
        u64::MAX
    } else if n <= lo {
        0
    } else {
        (1u64 << (n - lo)) - 1
    }
}

/// Indices of set bits across a multi-word bitset.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        path(n).add_edge(0, n - 1).unwrap()
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.size(), 6);
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
    }

    #[test]
    fn complement_of_two_k2_is_c4() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = two_k2.complement();
        let non_edges: Vec<_> = two_k2.non_edges().collect();
        assert_eq!(non_edges, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(c.edges().collect::<Vec<_>>(), non_edges);
        assert!(c.degrees().iter().all(|&d| d == 2));
        assert!(c.is_connected());
    }

    #[test]
    fn complement_works_across_word_boundaries() {
        let g = path(130);
        let c = g.complement();
        assert_eq!(c.size(), 130 * 129 / 2 - 129);
        assert_eq!(c.complement(), g);
        assert!(c.has_edge(0, 129) && !c.has_edge(64, 65) && c.has_edge(63, 65));
    }

    #[test]
    fn union_and_join_counts() {
        let k2 = Graph::complete(2).unwrap();
        let u = Graph::disjoint_union(&[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(Graph::disjoint_union(std::slice::from_ref(&k1)).unwrap(), k1);
        let u = Graph::disjoint_union(&[cycle(3), path(3)]).unwrap();
        assert_eq!((u.order(), u.size()), (6, 5));
        assert!(Graph::disjoint_union(&[]).is_err());

        let j = Graph::complete(3).unwrap().join(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(j, Graph::complete(5).unwrap());
        let j = cycle(4).join(&path(3)).unwrap();
        assert_eq!(j.size(), 4 + 2 + 12);
    }

    #[test]
    fn identify_with_pendant_on_triangle_gives_p3() {
        let g = cycle(3).identify_with_pendant(0, 1).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn identify_with_pendant_preserves_size_on_trees() {
        // Double star D_{6,2}: centers 0 and 3.
        let d = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let s = d.identify_with_pendant(0, 3).unwrap();
        assert_eq!(s.size(), d.size());
        assert_eq!(s.degree(0), 5);
        assert_eq!(s.order(), 6);
        assert_eq!(d.identify_with_pendant(0, 1), Err(Error::PendantEdge(0, 1)));
        assert_eq!(d.identify_with_pendant(1, 2), Err(Error::NotAnEdge(1, 2)));
    }

    #[test]
    fn shift_neighbors_validates_set() {
        let p = path(4); // 0-1-2-3
        let g = p.shift_neighbors(2, 0, &[3]).unwrap();
        assert!(g.has_edge(0, 3) && !g.has_edge(2, 3));
        assert_eq!(g.size(), p.size());
        assert!(p.shift_neighbors(1, 2, &[0]).is_ok());
        assert!(p.shift_neighbors(2, 0, &[1]).is_err());
        assert!(p.shift_neighbors(2, 0, &[]).is_err());
    }

    #[test]
    fn structure_queries() {
        let k1 = Graph::empty(1).unwrap().structure();
        assert!(k1.is_connected);
        assert_eq!((k1.max_degree, k1.min_degree), (0, 0));
        assert_eq!(k1.component_kinds, vec![ComponentKind::Path { order: 1 }]);
        assert_eq!(k1.nontrivial_path_count(), 0);

        let g = Graph::disjoint_union(&[cycle(3), path(2), path(2)])
            .unwrap()
            .structure();
        assert_eq!(g.components.len(), 3);
        assert_eq!(
            g.component_kinds,
            vec![
                ComponentKind::Cycle { order: 3 },
                ComponentKind::Path { order: 2 },
                ComponentKind::Path { order: 2 }
            ]
        );
        assert_eq!(g.nontrivial_path_count(), 2);
        assert!(!g.is_connected);

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap().structure();
        assert_eq!(star.component_kinds, vec![ComponentKind::Other { order: 4 }]);
        assert!(star.diameter_le_2);
        assert!(!path(4).diameter_le_2());
    }

    #[test]
    fn connectivity_large_order() {
        assert!(path(200).is_connected());
        assert!(!path(200).remove_edge(99, 100).unwrap().is_connected());
        assert!(path(64).is_connected());
    }
}
