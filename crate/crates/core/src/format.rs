//! graph6 strings and JSON edge lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes the upper triangle in column order, six bits per printable byte.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn parse_err(s: &str, why: &str) -> Error {
    Error::Parse(format!("graph6 {s:?}: {why}"))
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let body = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = body.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(s, "byte outside 63..=126"));
    }
    let take = |from: usize, count: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| parse_err(s, "truncated header"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63)))
    };
    let (n, start) = match bytes.first() {
        None => return Err(parse_err(s, "empty")),
        Some(&126) if bytes.get(1) == Some(&126) => (take(2, 6)?, 8),
        Some(&126) => (take(1, 3)?, 4),
        Some(&b) => (usize::from(b - 63), 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expect = pairs.div_ceil(6);
    if bytes.len() - start != expect {
        return Err(parse_err(
            s,
            &format!("expected {expect} data bytes, found {}", bytes.len() - start),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[start + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (bytes[start + k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(parse_err(s, "nonzero padding bits"));
    }
    Graph::from_edges(n, edges)
}

/// `{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl EdgeList {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeList {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

pub fn from_edge_list_json(s: &str) -> Result<Graph> {
    let list: EdgeList = serde_json::from_str(s).map_err(|e| Error::Parse(format!("edge list: {e}")))?;
    list.to_graph()
}

pub fn to_edge_list_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeList::from_graph(g)).expect("edge list serializes")
}
