//! All-pairs distances, transmissions, Wiener index and diameter.

use crate::error::{Error, Result};
use crate::graph::{bits, valid_mask, Graph};
use crate::scalar::Scalar;

/// Exact shortest-path distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
    transmissions: Vec<u64>,
    diameter: u32,
    wiener: u64,
}

/// Transmission-based bounds on the distance spectral radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralBounds<T> {
    /// `max(Tr_min, 2W/n)`.
    pub lower: T,
    /// `Tr_max`.
    pub upper: T,
}

/// BFS from every vertex over the adjacency bit rows.
pub fn distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    let stride = g.stride();
    let mut entries = vec![0u32; n * n];
    let mut visited = vec![0u64; stride];
    let mut frontier = vec![0u64; stride];
    let mut next = vec![0u64; stride];
    let mut diameter = 0;
    for s in 0..n {
        visited.iter_mut().for_each(|w| *w = 0);
        frontier.iter_mut().for_each(|w| *w = 0);
        visited[s / 64] |= 1 << (s % 64);
        frontier[s / 64] |= 1 << (s % 64);
        let mut reached = 1;
        let mut level = 0;
        while reached < n {
            level += 1;
            next.iter_mut().for_each(|w| *w = 0);
            for v in bits(&frontier) {
                for (x, r) in next.iter_mut().zip(g.row(v)) {
                    *x |= r;
                }
            }
            for (x, seen) in next.iter_mut().zip(&visited) {
                *x &= !seen;
            }
            if next.iter().all(|&w| w == 0) {
                return Err(Error::Disconnected);
            }
            for v in bits(&next) {
                entries[s * n + v] = level;
                reached += 1;
            }
            for (seen, x) in visited.iter_mut().zip(&next) {
                *seen |= x;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        debug_assert!(visited.iter().enumerate().all(|(i, &w)| w == valid_mask(n, i)));
        diameter = diameter.max(level);
    }
    let transmissions: Vec<u64> = entries
        .chunks(n)
        .map(|row| row.iter().map(|&d| u64::from(d)).sum())
        .collect();
    let wiener = transmissions.iter().sum::<u64>() / 2;
    Ok(DistanceMatrix {
        n,
        entries,
        transmissions,
        diameter,
        wiener,
    })
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn transmissions(&self) -> &[u64] {
        &self.transmissions
    }

    pub fn transmission(&self, v: usize) -> u64 {
        self.transmissions[v]
    }

    pub fn tr_min(&self) -> u64 {
        self.transmissions.iter().copied().min().unwrap_or(0)
    }

    pub fn tr_max(&self) -> u64 {
        self.transmissions.iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    pub fn is_transmission_regular(&self) -> bool {
        self.tr_min() == self.tr_max()
    }

    pub fn spectral_bounds<T: Scalar>(&self) -> SpectralBounds<T> {
        let mean = T::of(2.0 * self.wiener as f64 / self.n as f64);
        let tr_min = T::of(self.tr_min() as f64);
        SpectralBounds {
            lower: if mean > tr_min { mean } else { tr_min },
            upper: T::of(self.tr_max() as f64),
        }
    }
}

/// Free-function form of [`DistanceMatrix::is_transmission_regular`].
pub fn is_transmission_regular(d: &DistanceMatrix) -> bool {
    d.is_transmission_regular()
}

/// Free-function form of [`DistanceMatrix::spectral_bounds`].
pub fn spectral_bounds<T: Scalar>(d: &DistanceMatrix) -> SpectralBounds<T> {
    d.spectral_bounds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn dm(s: &str) -> DistanceMatrix {
        distances(&s.parse::<FamilySpec>().unwrap().construct().unwrap()).unwrap()
    }

    #[test]
    fn complete_graph() {
        let d = dm("k6");
        assert!(d.transmissions().iter().all(|&t| t == 5));
        assert_eq!(d.diameter(), 1);
        assert_eq!(d.spectral_bounds::<f64>(), SpectralBounds { lower: 5.0, upper: 5.0 });
    }

    #[test]
    fn path_and_cycle() {
        let d = dm("p4");
        assert_eq!(d.wiener(), 10);
        assert_eq!(d.diameter(), 3);
        let d = dm("c5");
        assert!(d.transmissions().iter().all(|&t| t == 6));
        assert_eq!(d.diameter(), 2);
    }

    #[test]
    fn transmission_regularity() {
        assert!(dm("c6").is_transmission_regular());
        assert!(!dm("p3").is_transmission_regular());
        assert!(dm("pnc:6,3").is_transmission_regular());
        assert!(!dm("pnc:9,3").is_transmission_regular());
        assert!(!dm("pnc:6,2").is_transmission_regular());
    }

    #[test]
    fn p3_bounds() {
        let b = dm("p3").spectral_bounds::<f64>();
        assert!((b.lower - 8.0 / 3.0).abs() < 1e-15);
        assert_eq!(b.upper, 3.0);
    }

    #[test]
    fn pnc_upper_bound_cases() {
        // Tr_max(P_{n,s+1}) is n−1, n, n, n+1 across the four ranges of s.
        for n in 4..12usize {
            for s in 1..n {
                let tr = dm(&format!("pnc:{n},{}", s + 1)).tr_max() as usize;
                let expect = if s == n - 1 {
                    n - 1
                } else if 2 * s >= n - 1 || (n % 2 == 0 && 2 * s == n - 2) {
                    n
                } else {
                    n + 1
                };
                assert_eq!(tr, expect, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(distances(&g), Err(Error::Disconnected));
        assert!(distances(&Graph::empty(1).unwrap()).is_ok());
    }

    #[test]
    fn large_path_crosses_words() {
        let g = FamilySpec::Path(150).construct().unwrap();
        let d = distances(&g).unwrap();
        assert_eq!(d.get(0, 149), 149);
        assert_eq!(d.diameter(), 149);
        let n = 150u64;
        assert_eq!(d.wiener(), (n - 1) * n * (n + 1) / 6);
    }
}
