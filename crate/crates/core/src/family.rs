//! Named graph constructions and the textual family-spec grammar.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! spec  := name ':' int (',' int)*      e.g. pnc:9,2
//!        | name int                     e.g. c3, k1
//!        | 'complement' '(' spec ')'
//!        | 'union' '(' spec (',' spec)* ')'
//!        | 'join' '(' spec ',' spec ')'
//! ```
//!
//! Labelings are fixed so that tests can refer to specific vertices:
//!
//! * `path:n` is `0-1-…-(n-1)`; `cycle:n` adds `{n-1, 0}`.
//! * `star:n` has center `0`.
//! * `dstar:n,a` has centers `0` (leaves `1..=a`) and `a+1` (the rest).
//! * `atree:n` / `btree:n` hang vertex `n-1` off vertex `1` / `2` of the path
//!   `0-…-(n-2)`.
//! * `pnc:n,c` complements the shorter paths first, then the longer ones.
//! * `ktilde:2a` removes the matching `{2i, 2i+1}`.
//! * `bh:m` is `K_{n-1}` on `0..n-1` plus vertex `n-1` joined to `0..s`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    DoubleStar {
        n: usize,
        a: usize,
    },
    ATree(usize),
    BTree(usize),
    Pnc {
        n: usize,
        c: usize,
    },
    /// `K̃_{2a}`; the parameter is the order `2a`.
    KTilde(usize),
    /// `G_m`: `K_{n-1}` plus one vertex of degree `s = m − C(n−1, 2)`.
    BhGraph(usize),
    ComplementOf(Box<FamilySpec>),
    UnionOf(Vec<FamilySpec>),
    JoinOf(Box<FamilySpec>, Box<FamilySpec>),
}

fn domain(family: &'static str, constraint: &str) -> Error {
    Error::Domain {
        family,
        constraint: constraint.to_string(),
    }
}

/// Unique `n` with `C(n−1, 2) < m ≤ C(n, 2)`, together with `s = m − C(n−1, 2)`.
pub fn order_for_size(m: usize) -> (usize, usize) {
    assert!(m >= 1, "size must be positive");
    let mut n = 2;
    while n * (n - 1) / 2 < m {
        n += 1;
    }
    (n, m - (n - 1) * (n - 2) / 2)
}

impl FamilySpec {
    pub fn complement_of(spec: FamilySpec) -> FamilySpec {
        FamilySpec::ComplementOf(Box::new(spec))
    }

    pub fn join_of(a: FamilySpec, b: FamilySpec) -> FamilySpec {
        FamilySpec::JoinOf(Box::new(a), Box::new(b))
    }

    /// `complement(parts ∪ extra·K_1)`.
    pub fn complement_with_isolated(parts: Vec<FamilySpec>, isolated: usize) -> FamilySpec {
        let mut all = parts;
        all.extend(std::iter::repeat_n(FamilySpec::Complete(1), isolated));
        FamilySpec::complement_of(FamilySpec::UnionOf(all))
    }

    /// Path sizes of the complement of `P_{n,c}`, shorter ones first.
    pub fn pnc_path_orders(n: usize, c: usize) -> Vec<usize> {
        let q = n / c;
        let r = n - c * q;
        let mut v = vec![q; c - r];
        v.extend(std::iter::repeat_n(q + 1, r));
        v
    }

    pub fn construct(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => {
                if n < 1 {
                    return Err(domain("path", "n ≥ 1"));
                }
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            FamilySpec::Cycle(n) => {
                if n < 3 {
                    return Err(domain("cycle", "n ≥ 3"));
                }
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)).chain([(n - 1, 0)]))
            }
            FamilySpec::Star(n) => {
                if n < 2 {
                    return Err(domain("star", "n ≥ 2"));
                }
                Graph::from_edges(n, (1..n).map(|i| (0, i)))
            }
            FamilySpec::Complete(n) => {
                if n < 1 {
                    return Err(domain("complete", "n ≥ 1"));
                }
                Graph::complete(n)
            }
            FamilySpec::DoubleStar { n, a } => {
                if a < 1 || 2 * a + 2 > n {
                    return Err(domain("dstar", "1 ≤ a and 2a ≤ n − 2"));
                }
                let c2 = a + 1;
                let edges = (1..=a)
                    .map(|i| (0, i))
                    .chain([(0, c2)])
                    .chain((c2 + 1..n).map(|i| (c2, i)));
                Graph::from_edges(n, edges)
            }
            FamilySpec::ATree(n) | FamilySpec::BTree(n) => {
                let (name, min, at) = match self {
                    FamilySpec::ATree(_) => ("atree", 4, 1),
                    _ => ("btree", 6, 2),
                };
                if n < min {
                    return Err(domain(name, &format!("n ≥ {min}")));
                }
                let edges = (1..n - 1).map(|i| (i - 1, i)).chain([(at, n - 1)]);
                Graph::from_edges(n, edges)
            }
            FamilySpec::Pnc { n, c } => {
                if n < 1 || c < 1 || c > n {
                    return Err(domain("pnc", "1 ≤ c ≤ n"));
                }
                let parts: Result<Vec<Graph>> = Self::pnc_path_orders(n, c)
                    .into_iter()
                    .map(|k| FamilySpec::Path(k).construct())
                    .collect();
                Ok(Graph::disjoint_union(&parts?)?.complement())
            }
            FamilySpec::KTilde(order) => {
                if order < 2 || order % 2 != 0 {
                    return Err(domain("ktilde", "even order ≥ 2"));
                }
                let matching = Graph::from_edges(order, (0..order / 2).map(|i| (2 * i, 2 * i + 1)))?;
                Ok(matching.complement())
            }
            FamilySpec::BhGraph(m) => {
                if m < 3 {
                    return Err(domain("bh", "m ≥ 3"));
                }
                let (n, s) = order_for_size(m);
                let edges = (0..n - 1)
                    .flat_map(|u| (u + 1..n - 1).map(move |v| (u, v)))
                    .chain((0..s).map(|u| (u, n - 1)));
                Graph::from_edges(n, edges)
            }
            FamilySpec::ComplementOf(ref inner) => Ok(inner.construct()?.complement()),
            FamilySpec::UnionOf(ref parts) => {
                if parts.is_empty() {
                    return Err(domain("union", "at least one part"));
                }
                let gs: Result<Vec<Graph>> = parts.iter().map(FamilySpec::construct).collect();
                Graph::disjoint_union(&gs?)
            }
            FamilySpec::JoinOf(ref a, ref b) => a.construct()?.join(&b.construct()?),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::DoubleStar { n, a } => write!(f, "dstar:{n},{a}"),
            FamilySpec::ATree(n) => write!(f, "atree:{n}"),
            FamilySpec::BTree(n) => write!(f, "btree:{n}"),
            FamilySpec::Pnc { n, c } => write!(f, "pnc:{n},{c}"),
            FamilySpec::KTilde(n) => write!(f, "ktilde:{n}"),
            FamilySpec::BhGraph(m) => write!(f, "bh:{m}"),
            FamilySpec::ComplementOf(g) => write!(f, "complement({g})"),
            FamilySpec::UnionOf(parts) => {
                write!(f, "union(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            FamilySpec::JoinOf(a, b) => write!(f, "join({a},{b})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser {
            src: compact.as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("family spec: {what} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn name(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(b'a'..=b'z' | b'_')) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.error("expected an integer"))
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.name();
        if name.is_empty() {
            return Err(self.error("expected a family name"));
        }
        match name.as_str() {
            "complement" | "union" | "join" => {
                self.eat(b'(')?;
                let mut args = vec![self.spec()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    args.push(self.spec()?);
                }
                self.eat(b')')?;
                match name.as_str() {
                    "complement" if args.len() == 1 => Ok(FamilySpec::complement_of(args.remove(0))),
                    "union" => Ok(FamilySpec::UnionOf(args)),
                    "join" if args.len() == 2 => {
                        let b = args.pop().unwrap();
                        let a = args.pop().unwrap();
                        Ok(FamilySpec::join_of(a, b))
                    }
                    _ => Err(self.error(&format!("wrong number of arguments to {name}"))),
                }
            }
            _ => {
                let mut ints = Vec::new();
                if self.peek() == Some(b':') {
                    self.pos += 1;
                    ints.push(self.int()?);
                    while self.peek() == Some(b',') && matches!(self.src.get(self.pos + 1), Some(b'0'..=b'9')) {
                        self.pos += 1;
                        ints.push(self.int()?);
                    }
                } else {
                    ints.push(self.int()?);
                }
                leaf(&name, &ints).ok_or_else(|| {
                    Error::Parse(format!(
                        "family spec: unknown family '{name}' with {} parameter(s)",
                        ints.len()
                    ))
                })
            }
        }
    }
}

fn leaf(name: &str, ints: &[usize]) -> Option<FamilySpec> {
    use FamilySpec::*;
    Some(match (name, ints) {
        ("path" | "p", &[n]) => Path(n),
        ("cycle" | "c", &[n]) => Cycle(n),
        ("star" | "s", &[n]) => Star(n),
        ("complete" | "k", &[n]) => Complete(n),
        ("dstar" | "d", &[n, a]) => DoubleStar { n, a },
        ("atree" | "a", &[n]) => ATree(n),
        ("btree" | "b", &[n]) => BTree(n),
        ("pnc", &[n, c]) => Pnc { n, c },
        ("ktilde", &[n]) => KTilde(n),
        ("bh", &[m]) => BhGraph(m),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().construct().unwrap()
    }

    #[test]
    fn pnc_small_cases() {
        let c4 = build("c4");
        assert_eq!(build("pnc:4,2"), c4.relabel(&[0, 2, 1, 3]));
        assert!(build("pnc:4,2").degrees().iter().all(|&d| d == 2));
        assert_eq!(build("pnc:6,6"), Graph::complete(6).unwrap());
        assert_eq!(build("pnc:7,1"), build("path:7").complement());
        assert_eq!(FamilySpec::pnc_path_orders(9, 2), vec![4, 5]);
        assert_eq!(build("pnc:9,2"), build("complement(union(p4,p5))"));
        assert_eq!(FamilySpec::pnc_path_orders(10, 3), vec![3, 3, 4]);
    }

    #[test]
    fn pnc_closed_form_sizes_and_degrees() {
        for n in 1..=16 {
            for c in 1..=n {
                let g = FamilySpec::Pnc { n, c }.construct().unwrap();
                assert_eq!(g.order(), n);
                assert_eq!(g.size(), n * (n - 1) / 2 - (n - c));
                if 2 * c <= n {
                    assert!(g.max_degree() <= n - 2);
                }
                assert!(g.min_degree() + 3 >= n);
            }
        }
    }

    #[test]
    fn trees() {
        let mut d = build("atree:5").degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, vec![3, 2, 1, 1, 1]);
        let b = build("btree:6");
        assert_eq!(b.degree(2), 3);
        assert_eq!(b.size(), 5);
        assert!(FamilySpec::BTree(5).construct().is_err());
        assert!(FamilySpec::ATree(3).construct().is_err());
    }

    #[test]
    fn double_star_and_ktilde() {
        let d = build("dstar:6,2");
        assert_eq!((d.degree(0), d.degree(3)), (3, 3));
        assert_eq!(d.size(), 5);
        let d1 = build("dstar:5,1");
        assert_eq!((d1.degree(0), d1.degree(2)), (2, 3));
        assert!(matches!(
            FamilySpec::DoubleStar { n: 5, a: 2 }.construct(),
            Err(Error::Domain { family: "dstar", .. })
        ));
        for a in 1..6 {
            let k = FamilySpec::KTilde(2 * a).construct().unwrap();
            assert_eq!(k.size(), a * (2 * a - 1) - a);
            assert!(k.degrees().iter().all(|&x| x == 2 * a - 2));
        }
        assert!(FamilySpec::KTilde(5).construct().is_err());
    }

    #[test]
    fn basic_family_sizes() {
        for n in 3..12 {
            assert_eq!(FamilySpec::Path(n).construct().unwrap().size(), n - 1);
            assert_eq!(FamilySpec::Cycle(n).construct().unwrap().size(), n);
            assert_eq!(FamilySpec::Star(n).construct().unwrap().size(), n - 1);
            assert_eq!(FamilySpec::Complete(n).construct().unwrap().size(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn bh_graph() {
        // m = 16: n = 7, s = 1.
        let g = build("bh:16");
        assert_eq!((g.order(), g.size()), (7, 16));
        assert_eq!(g.degree(6), 1);
        assert_eq!(order_for_size(16), (7, 1));
        assert_eq!(order_for_size(21), (7, 6));
        assert!(FamilySpec::BhGraph(2).construct().is_err());
    }

    #[test]
    fn join_identity_for_pnc() {
        // P_{n,s+1} = K_{2s+2−n} ∨ K̃_{2n−2s−2} for (n, s) = (6, 3).
        assert_eq!(build("pnc:6,4").size(), build("join(k2,ktilde:4)").size());
        let w = build("join(k1,ktilde:4)");
        assert_eq!((w.order(), w.max_degree()), (5, 4));
        assert_eq!(build("join(k2,k3)"), Graph::complete(5).unwrap());
    }

    #[test]
    fn grammar_round_trip() {
        for s in [
            "pnc:9,2",
            "complement(union(cycle:3,path:2,path:2))",
            "join(complete:1,ktilde:4)",
            "dstar:7,2",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let short: FamilySpec = "complement( union(c3, p2, p2) )".parse().unwrap();
        assert_eq!(short.to_string(), "complement(union(cycle:3,path:2,path:2))");
        assert!("pnc:9".parse::<FamilySpec>().is_err());
        assert!("foo:3".parse::<FamilySpec>().is_err());
        assert!("union(c3".parse::<FamilySpec>().is_err());
        assert!("join(c3)".parse::<FamilySpec>().is_err());
    }
}
