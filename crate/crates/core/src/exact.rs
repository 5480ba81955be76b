//! Exact re-verification of spectral-radius comparisons.
//!
//! When two floating point radii are closer than the strict-gap threshold the
//! ordering is decided from the integer characteristic polynomials of the two
//! distance matrices, evaluated in exact rational arithmetic. Two facts do
//! the work, both valid because distance matrices are symmetric and so their
//! characteristic polynomials are real-rooted and monic:
//!
//! * if `p⁽ᵏ⁾(q) > 0` for every `k ≥ 0` then every root of `p` is below `q`;
//! * if `p(q) < 0` then `p` has a root above `q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::metric::DistanceMatrix;

/// Integer polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

/// Outcome of an exact comparison of two spectral radii.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactOrder {
    Less,
    Equal,
    Greater,
    /// None of the certificates applied at the probe points tried.
    Undecided,
}

/// `det(tI − D)` by Faddeev–LeVerrier in exact integer arithmetic.
pub fn characteristic_polynomial(d: &DistanceMatrix) -> IntPoly {
    let n = d.order();
    let a: Vec<BigInt> = d.entries().iter().map(|&x| BigInt::from(x)).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = &a[i * n + l];
                if ail.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let mlj = &m[l * n + j];
                    if !mlj.is_zero() {
                        next[i * n + j] += ail * mlj;
                    }
                }
            }
        }
        for i in 0..n {
            next[i * n + i] += &coeffs[n - k + 1];
        }
        // c_{n−k} = −tr(A·M_k)/k
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &a[i * n + l] * &next[l * n + i];
            }
        }
        coeffs[n - k] = -(trace / BigInt::from(k));
        m = next;
    }
    IntPoly(coeffs)
}

type RatPoly = Vec<BigRational>;

fn to_rat(p: &IntPoly) -> RatPoly {
    p.0.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn trim(p: &mut RatPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn eval(p: &[BigRational], q: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * q + c)
}

fn derivative(p: &[BigRational]) -> RatPoly {
    let mut d: RatPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    if d.is_empty() {
        d.push(BigRational::zero());
    }
    d
}

/// `p⁽ᵏ⁾(q) > 0` for all `k`, which places every root of `p` below `q`.
fn strictly_above_roots(p: &[BigRational], q: &BigRational) -> bool {
    let mut cur = p.to_vec();
    loop {
        if !eval(&cur, q).is_positive() {
            return false;
        }
        if cur.len() <= 1 {
            return true;
        }
        cur = derivative(&cur);
    }
}

fn make_monic(p: &mut RatPoly) {
    trim(p);
    let lead = p.last().cloned().unwrap_or_else(BigRational::one);
    if !lead.is_zero() {
        for c in p.iter_mut() {
            *c = &*c / &lead;
        }
    }
}

fn div_rem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &f * bc;
        }
        q[shift] = f;
        r.pop();
        if r.is_empty() {
            r.push(BigRational::zero());
        }
        trim(&mut r);
    }
    (q, r)
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !(y.len() == 1 && y[0].is_zero()) {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&mut x);
    x
}

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite probe point")
}

/// Decides `ρ(D₁)` versus `ρ(D₂)` exactly, using the float estimates only to
/// choose probe points.
pub fn compare_radii(d1: &DistanceMatrix, rho1: f64, d2: &DistanceMatrix, rho2: f64) -> ExactOrder {
    let p1 = characteristic_polynomial(d1);
    let p2 = characteristic_polynomial(d2);
    if p1 == p2 {
        return ExactOrder::Equal;
    }
    let r1 = to_rat(&p1);
    let r2 = to_rat(&p2);
    if rho1 != rho2 {
        let q = rational(0.5 * (rho1 + rho2));
        let (lo, hi, ord) = if rho1 < rho2 {
            (&r1, &r2, ExactOrder::Less)
        } else {
            (&r2, &r1, ExactOrder::Greater)
        };
        if strictly_above_roots(lo, &q) && eval(hi, &q).is_negative() {
            return ord;
        }
    }
    // A common largest root must be the largest root of gcd(p₁, p₂). If the
    // cofactors have all roots below q and the gcd has a root above q, the
    // largest roots of p₁ and p₂ coincide.
    let g = gcd(&r1, &r2);
    if g.len() < 2 {
        return ExactOrder::Undecided;
    }
    let (c1, _) = div_rem(&r1, &g);
    let (c2, _) = div_rem(&r2, &g);
    let rho = rho1.max(rho2);
    for k in 3..=12 {
        let q = rational(rho - 10f64.powi(-k) * rho.max(1.0));
        if eval(&g, &q).is_negative() && strictly_above_roots(&c1, &q) && strictly_above_roots(&c2, &q) {
            return ExactOrder::Equal;
        }
    }
    ExactOrder::Undecided
}
