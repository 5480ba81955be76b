//! Closed-form characteristic polynomials of the two quotient systems that
//! compete for the maximum over complements of forests with `c` components:
//!
//! * `H  = complement(S_{n−c} ∪ K_2 ∪ (c−2)K_1)`, quartic `P_H`;
//! * `H′ = complement(D_{n−c+1,1} ∪ (c−1)K_1)`, quintic `P_{H′}`;
//!
//! related by `P_{H′}(t) = P_H(t)(t+2) − (2t² + (2n−2c+5)t + 3n−4c+3)`.

use num_traits::{FromPrimitive, Num};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientKind {
    H,
    HPrime,
}

/// Exact integer polynomial, coefficients in descending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPolynomial {
    pub kind: QuotientKind,
    pub n: i64,
    pub c: i64,
    coefficients: Vec<i64>,
}

fn horner<T: Num + Copy + FromPrimitive>(coefficients: &[i64], t: T) -> T {
    coefficients.iter().fold(T::zero(), |acc, &a| {
        acc * t + T::from_i64(a).expect("integer coefficient converts to the scalar type")
    })
}

fn derivative(coefficients: &[i64]) -> Vec<i64> {
    let deg = coefficients.len() - 1;
    coefficients[..deg]
        .iter()
        .enumerate()
        .map(|(i, &a)| a * (deg - i) as i64)
        .collect()
}

impl QuotientPolynomial {
    pub fn h(n: i64, c: i64) -> Self {
        QuotientPolynomial {
            kind: QuotientKind::H,
            n,
            c,
            coefficients: vec![
                1,
                -(n - 3),
                -(5 * n - 3 * c - 4),
                c * n - 4 * n - c * c + 2 * c,
                2 * n - 2 * c - 4,
            ],
        }
    }

    pub fn h_prime(n: i64, c: i64) -> Self {
        QuotientPolynomial {
            kind: QuotientKind::HPrime,
            n,
            c,
            coefficients: vec![
                1,
                -(n - 5),
                -(7 * n - 3 * c - 10),
                c * n - 14 * n - c * c + 8 * c + 6,
                2 * c * n - 8 * n - 2 * c * c + 4 * c - 9,
                n - 11,
            ],
        }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation; exact for integer or rational `T`.
    pub fn eval<T: Num + Copy + FromPrimitive>(&self, t: T) -> T {
        horner(&self.coefficients, t)
    }

    /// The graph whose distance spectral radius is the largest root.
    pub fn target_spec(&self) -> Result<FamilySpec> {
        let (n, c) = (self.n, self.c);
        if c < 2 || n - c < 3 {
            return Err(Error::Domain {
                family: "quotient polynomial",
                constraint: "2 ≤ c ≤ n − 3".into(),
            });
        }
        let (n, c) = (n as usize, c as usize);
        Ok(match self.kind {
            QuotientKind::H => {
                FamilySpec::complement_with_isolated(vec![FamilySpec::Star(n - c), FamilySpec::Complete(2)], c - 2)
            }
            QuotientKind::HPrime => {
                FamilySpec::complement_with_isolated(vec![FamilySpec::DoubleStar { n: n - c + 1, a: 1 }], c - 1)
            }
        })
    }

    pub fn target_graph(&self) -> Result<Graph> {
        self.target_spec()?.construct()
    }

    /// Largest real root, bracketed in `[n − 1, 2n − c − 1]` and widened by
    /// doubling if needed, then bisected. The target has diameter two and is
    /// not complete, so `ρ > n − 1` while every other eigenvalue of
    /// `D = 2(J − I) − A` is at most `Δ − 2 ≤ n − 3`.
    ///
    /// Maximality is certified at the upper end of the final bracket: every
    /// derivative is positive there, so no root lies above it.
    pub fn largest_root<T: Scalar>(&self) -> Result<T> {
        let lo0 = (self.n - 1) as f64;
        let mut hi0 = (2 * self.n - self.c - 1).max(self.n + 1) as f64;
        if self.eval(lo0) >= 0.0 {
            return Err(Error::NoSignChange { lo: lo0, hi: hi0 });
        }
        let mut doublings = 0;
        while self.eval(hi0) <= 0.0 {
            if doublings == 60 {
                return Err(Error::NoSignChange { lo: lo0, hi: hi0 });
            }
            hi0 *= 2.0;
            doublings += 1;
        }
        let (mut lo, mut hi) = (T::of(lo0), T::of(hi0));
        let two = T::of(2.0);
        loop {
            let mid = (lo + hi) / two;
            if mid <= lo || mid >= hi {
                break;
            }
            if self.eval(mid) < T::zero() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut d = self.coefficients.clone();
        while d.len() > 1 {
            d = derivative(&d);
            if horner(&d, hi) <= T::zero() {
                return Err(Error::RootNotCertified {
                    root: hi.to_f64_lossy(),
                });
            }
        }
        Ok(if self.eval(hi).abs() < self.eval(lo).abs() {
            hi
        } else {
            lo
        })
    }
}

/// One `(n, c)` instance of the oracle comparison between closed-form roots
/// and the eigensolver on the constructed graphs.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCase {
    pub n: i64,
    pub c: i64,
    pub root_h: f64,
    pub rho_h: f64,
    pub root_h_prime: f64,
    pub rho_h_prime: f64,
    /// `P_{H′}(ρ(H))`; negative means `ρ(H′) > ρ(H)`.
    pub h_prime_at_rho_h: f64,
    pub identity_holds: bool,
    pub passed: bool,
}

pub fn oracle_case(solver: &crate::spectral::Solver, n: i64, c: i64, tol: f64) -> Result<OracleCase> {
    let h = QuotientPolynomial::h(n, c);
    let hp = QuotientPolynomial::h_prime(n, c);
    let root_h: f64 = h.largest_root()?;
    let root_h_prime: f64 = hp.largest_root()?;
    let rho_h = solver.spectral_radius::<f64>(&h.target_graph()?)?.rho;
    let rho_h_prime = solver.spectral_radius::<f64>(&hp.target_graph()?)?.rho;
    let h_prime_at_rho_h = hp.eval(rho_h);
    let identity_holds = defect_coefficients(n, c).iter().all(|&a| a == 0);
    let passed = (root_h - rho_h).abs() <= tol
        && (root_h_prime - rho_h_prime).abs() <= tol
        && h_prime_at_rho_h < 0.0
        && identity_holds;
    Ok(OracleCase {
        n,
        c,
        root_h,
        rho_h,
        root_h_prime,
        rho_h_prime,
        h_prime_at_rho_h,
        identity_holds,
        passed,
    })
}

/// `P_{H′}(t) − [P_H(t)(t+2) − (2t² + (2n−2c+5)t + 3n−4c+3)]`.
pub fn factorization_defect<T: Num + Copy + FromPrimitive>(n: i64, c: i64, t: T) -> T {
    let h = QuotientPolynomial::h(n, c).eval(t);
    let hp = QuotientPolynomial::h_prime(n, c).eval(t);
    let two = T::from_i64(2).unwrap();
    let lin = T::from_i64(2 * n - 2 * c + 5).unwrap();
    let cst = T::from_i64(3 * n - 4 * c + 3).unwrap();
    hp - (h * (t + two) - (two * t * t + lin * t + cst))
}

/// Coefficientwise defect of the factorization identity, descending degree.
/// All zero exactly when the identity holds as a polynomial identity.
pub fn defect_coefficients(n: i64, c: i64) -> Vec<i64> {
    let h = QuotientPolynomial::h(n, c);
    let hp = QuotientPolynomial::h_prime(n, c);
    // P_H(t)·(t + 2), degree 5.
    let mut rhs = vec![0i64; 6];
    for (i, &a) in h.coefficients().iter().enumerate() {
        rhs[i] += a;
        rhs[i + 1] += 2 * a;
    }
    rhs[3] -= 2;
    rhs[4] -= 2 * n - 2 * c + 5;
    rhs[5] -= 3 * n - 4 * c + 3;
    hp.coefficients().iter().zip(&rhs).map(|(a, b)| a - b).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn constant_terms() {
        for n in 5..20 {
            for c in 2..n - 2 {
                assert_eq!(QuotientPolynomial::h(n, c).eval(0i64), 2 * n - 2 * c - 4);
                assert_eq!(QuotientPolynomial::h_prime(n, c).eval(0i64), n - 11);
            }
        }
    }

    #[test]
    fn identity_is_exact() {
        assert_eq!(factorization_defect(10, 4, 1i64), 0);
        for n in -5..40 {
            for c in -5..40 {
                assert!(defect_coefficients(n, c).iter().all(|&x| x == 0));
            }
        }
        let t = Ratio::new(7i64, 3);
        assert_eq!(factorization_defect(12, 5, t), Ratio::from_integer(0));
    }

    #[test]
    fn root_matches_target_graph() {
        let p = QuotientPolynomial::h(9, 3);
        let g = p.target_graph().unwrap();
        let rho = crate::spectral::distance_spectral_radius::<f64>(&g).unwrap().rho;
        assert!(p.eval(rho).abs() < 1e-6 * rho.powi(4));
        assert!((p.largest_root::<f64>().unwrap() - rho).abs() < 1e-8);
    }

    #[test]
    fn target_domain() {
        assert!(QuotientPolynomial::h(6, 4).target_graph().is_err());
        assert!(QuotientPolynomial::h(6, 1).target_graph().is_err());
        let g = QuotientPolynomial::h_prime(7, 2).target_graph().unwrap();
        assert_eq!(g.order(), 7);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        // P_H(n − 1) = 4 > 0 for (n, c) = (0, 3).
        let p = QuotientPolynomial::h(0, 3);
        assert!(matches!(p.largest_root::<f64>(), Err(Error::NoSignChange { .. })));
    }
}
