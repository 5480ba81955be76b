//! Canonical labeling by individualization and refinement.
//!
//! The search tree starts from the unit partition refined to an equitable
//! ordered partition; an interior node individualizes one vertex of its first
//! non-singleton cell and refines again. Every discrete leaf induces a
//! labeling, and the leaf code is the upper triangle of the relabeled
//! adjacency matrix read in column order, first pair as the most significant
//! bit. The canonical code is the minimum over all leaves. Two pruning rules
//! keep the tree small, both driven by automorphisms found when a leaf
//! reproduces the best code:
//!
//! * a child is skipped when it lies in the orbit of an explored sibling under
//!   the automorphisms found so far that fix the current prefix;
//! * after such a discovery the search jumps back to the common ancestor of
//!   the two leaves, whose remaining subtree is an automorphic image.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;

/// Largest order accepted by [`canonical`].
pub const CANON_LIMIT: usize = 14;

/// Isomorphism-invariant encoding of a graph together with its orbits.
///
/// Equality, ordering and hashing use `(n, code)` only.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    n: usize,
    code: u128,
    labeling: Vec<usize>,
    orbits: Vec<usize>,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// `(n, code)` pair identifying an isomorphism class.
pub type CanonicalKey = (usize, u128);

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Upper-triangle bits in column order, the first pair most significant.
    pub fn code(&self) -> u128 {
        self.code
    }

    pub fn key(&self) -> CanonicalKey {
        (self.n, self.code)
    }

    /// `labeling[v]` is the canonical position of vertex `v`.
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    /// `orbit_ids()[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub fn orbit_ids(&self) -> &[usize] {
        &self.orbits
    }

    /// Orbits as sorted vertex lists ordered by their smallest vertex.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &o) in self.orbits.iter().enumerate() {
            out.entry(o).or_default().push(v);
        }
        out.into_values().collect()
    }

    pub fn has_nontrivial_automorphism(&self) -> bool {
        self.orbits.iter().enumerate().any(|(v, &o)| o != v)
    }

    pub fn canonical_graph(&self) -> Graph {
        decode(self.n, self.code)
    }

    /// graph6 string of the canonical graph.
    pub fn graph6(&self) -> String {
        to_graph6(&self.canonical_graph())
    }
}

/// Rebuilds the graph whose canonical code is `code`.
pub fn decode(n: usize, code: u128) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (pairs - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_row_words(n, &rows)
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > CANON_LIMIT {
        return Err(Error::ScopeLimit {
            what: "canonical form order",
            limit: CANON_LIMIT,
            got: g.order(),
        });
    }
    Ok(())
}

fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.order()).map(|v| g.row_word(v) as u32).collect()
}

fn bits32(mut w: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// Splits cells by neighbour counts into each cell in turn until the ordered
/// partition is equitable. Parts of a split cell stay in place, ordered by
/// increasing count.
fn refine(adj: &[u32], cells: &mut Vec<u32>) {
    let n = adj.len();
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() && cells.len() < n {
            let splitter = cells[si];
            let mut next = Vec::with_capacity(n);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut buckets = [0u32; 16];
                for v in bits32(cell) {
                    buckets[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                let before = next.len();
                next.extend(buckets.iter().copied().filter(|&b| b != 0));
                changed |= next.len() - before > 1;
            }
            *cells = next;
            si += 1;
        }
        if !changed || cells.len() == n {
            return;
        }
    }
}

fn leaf_code(adj: &[u32], cells: &[u32]) -> u128 {
    let inv: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
    let mut code = 0u128;
    for j in 1..inv.len() {
        let row = adj[inv[j]];
        for &vi in &inv[..j] {
            code = (code << 1) | u128::from(row >> vi & 1);
        }
    }
    code
}

fn labeling_of(cells: &[u32]) -> Vec<usize> {
    let mut lab = vec![0; cells.len()];
    for (pos, c) in cells.iter().enumerate() {
        lab[c.trailing_zeros() as usize] = pos;
    }
    lab
}

struct Search<'a> {
    adj: &'a [u32],
    best: Option<(u128, Vec<usize>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

enum Outcome {
    Continue,
    JumpTo(usize),
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<u32>, prefix: &mut Vec<usize>) -> Outcome {
        refine(self.adj, &mut cells);
        let n = self.adj.len();
        if cells.len() == n {
            return self.leaf(&cells, prefix);
        }
        let (ti, &target) = cells
            .iter()
            .enumerate()
            .find(|(_, c)| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let depth = prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        for v in bits32(target) {
            if !explored.is_empty() {
                let mut parent: Vec<usize> = (0..n).collect();
                for g in &self.generators {
                    if prefix.iter().all(|&p| g[p] == p) {
                        for (a, &b) in g.iter().enumerate() {
                            union(&mut parent, a, b);
                        }
                    }
                }
                let rv = find(&mut parent, v);
                if explored.iter().any(|&w| find(&mut parent, w) == rv) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            prefix.push(v);
            let outcome = self.run(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Outcome::JumpTo(d) = outcome {
                if d < depth {
                    return outcome;
                }
            }
        }
        Outcome::Continue
    }

    fn leaf(&mut self, cells: &[u32], prefix: &[usize]) -> Outcome {
        let code = leaf_code(self.adj, cells);
        match &self.best {
            Some((best, _, _)) if code > *best => Outcome::Continue,
            Some((best, best_lab, best_path)) if code == *best => {
                let lab = labeling_of(cells);
                // γ(v) = w where best_lab[v] = lab[w].
                let mut inv = vec![0; lab.len()];
                for (w, &p) in lab.iter().enumerate() {
                    inv[p] = w;
                }
                let gamma: Vec<usize> = best_lab.iter().map(|&p| inv[p]).collect();
                let common = best_path.iter().zip(prefix).take_while(|(a, b)| a == b).count();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.generators.push(gamma);
                }
                Outcome::JumpTo(common)
            }
            _ => {
                self.best = Some((code, labeling_of(cells), prefix.to_vec()));
                Outcome::Continue
            }
        }
    }
}

struct Searched {
    code: u128,
    labeling: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

fn search(adj: &[u32], initial: Vec<u32>) -> Searched {
    let mut s = Search {
        adj,
        best: None,
        generators: Vec::new(),
    };
    s.run(initial, &mut Vec::new());
    let (code, labeling, _) = s.best.expect("search reaches at least one leaf");
    Searched {
        code,
        labeling,
        generators: s.generators,
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

/// Canonical key only, without orbit computation.
pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    check_order(g)?;
    let adj = adjacency(g);
    Ok((g.order(), search(&adj, vec![full_mask(g.order())]).code))
}

/// Canonical form with labeling and automorphism orbits.
///
/// Orbits found from the search's automorphisms are merged further by
/// comparing the canonical codes of the graph with one vertex distinguished,
/// so the partition is exact whether or not the discovered automorphisms
/// generate the whole group.
pub fn canonical(g: &Graph) -> Result<CanonicalForm> {
    check_order(g)?;
    let n = g.order();
    let adj = adjacency(g);
    let all = full_mask(n);
    let s = search(&adj, vec![all]);
    let mut parent: Vec<usize> = (0..n).collect();
    for gen in &s.generators {
        for (a, &b) in gen.iter().enumerate() {
            union(&mut parent, a, b);
        }
    }
    let reps: Vec<usize> = (0..n).filter(|&v| find(&mut parent, v) == v).collect();
    if reps.len() > 1 {
        let mut seen: Vec<(u128, usize)> = Vec::new();
        for &r in &reps {
            let code = search(&adj, vec![1 << r, all & !(1 << r)]).code;
            match seen.iter().find(|(c, _)| *c == code) {
                Some(&(_, first)) => union(&mut parent, first, r),
                None => seen.push((code, r)),
            }
        }
    }
    let orbits = (0..n).map(|v| find(&mut parent, v)).collect();
    Ok(CanonicalForm {
        n,
        code: s.code,
        labeling: s.labeling,
        orbits,
    })
}

/// The canonically relabeled graph.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (n, code) = canonical_key(g)?;
    Ok(decode(n, code))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.size() == b.size() && canonical_key(a)? == canonical_key(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().construct().unwrap()
    }

    #[test]
    fn labeling_reproduces_code() {
        for s in ["p5", "c6", "pnc:9,2", "dstar:7,2", "k4", "bh:12"] {
            let g = build(s);
            let cf = canonical(&g).unwrap();
            assert_eq!(g.relabel(cf.labeling()), cf.canonical_graph(), "{s}");
        }
    }

    #[test]
    fn self_complementary_path() {
        let p4 = build("p4");
        assert_eq!(canonical_key(&p4).unwrap(), canonical_key(&p4.complement()).unwrap());
    }

    #[test]
    fn orbits_of_small_families() {
        let c5 = canonical(&build("c5")).unwrap();
        assert_eq!(c5.orbits(), vec![vec![0, 1, 2, 3, 4]]);
        let s4 = canonical(&build("s4")).unwrap();
        assert_eq!(s4.orbits(), vec![vec![0], vec![1, 2, 3]]);
        let p4 = canonical(&build("p4")).unwrap();
        assert_eq!(p4.orbits(), vec![vec![0, 3], vec![1, 2]]);
        assert!(canonical(&build("complement(union(c3,p4,p2))"))
            .unwrap()
            .has_nontrivial_automorphism());
    }

    #[test]
    fn order_limit() {
        assert!(canonical(&build("p15")).is_err());
        assert!(canonical(&build("k14")).is_ok());
        assert!(canonical(&Graph::empty(14).unwrap()).is_ok());
    }

    #[test]
    fn relabeled_copies_agree() {
        let g = build("complement(union(c3,p4,p2))");
        let key = canonical_key(&g).unwrap();
        let perms = [
            [8, 1, 7, 3, 0, 2, 5, 4, 6],
            [1, 2, 3, 4, 5, 6, 7, 8, 0],
            [4, 3, 2, 1, 0, 8, 7, 6, 5],
        ];
        for p in perms {
            assert_eq!(canonical_key(&g.relabel(&p)).unwrap(), key);
        }
    }
}
