//! Distance spectral radius and distance Perron vector with certified residuals.
//!
//! Orders up to [`DENSE_LIMIT`] use a cyclic Jacobi eigendecomposition; larger
//! orders use power iteration on `D + Tr_max·I`, whose dominant eigenvalue is
//! `ρ + Tr_max` because every eigenvalue of `D` lies in `[−ρ, ρ]`. Either way
//! the result is accepted only once `‖Dx − ρx‖∞ ≤ tol·max(1, ρ)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{distances, DistanceMatrix};
use crate::scalar::Scalar;

/// Largest order handled by the dense Jacobi solver.
pub const DENSE_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `n = 1`: `D` is the zero matrix.
    Trivial,
    Jacobi,
    ShiftedPower,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult<T> {
    pub rho: T,
    /// Unit, entrywise positive.
    pub perron: Vec<T>,
    /// `‖Dx − ρx‖∞`.
    pub residual: T,
    /// Jacobi sweeps or power iterations.
    pub iterations: usize,
    pub method: Method,
}

/// Eigensolver settings. The default tolerance is [`Scalar::RESIDUAL_TOL`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Solver {
    pub residual_tol: Option<f64>,
}

impl Solver {
    pub fn with_tolerance(tol: f64) -> Self {
        Solver {
            residual_tol: Some(tol),
        }
    }

    fn tol<T: Scalar>(&self) -> T {
        T::of(self.residual_tol.unwrap_or(T::RESIDUAL_TOL))
    }

    pub fn spectral_radius<T: Scalar>(&self, g: &Graph) -> Result<SpectralResult<T>> {
        self.perron_pair(&distances(g)?)
    }

    pub fn perron_pair<T: Scalar>(&self, d: &DistanceMatrix) -> Result<SpectralResult<T>> {
        let n = d.order();
        if n == 1 {
            return Ok(SpectralResult {
                rho: T::zero(),
                perron: vec![T::one()],
                residual: T::zero(),
                iterations: 0,
                method: Method::Trivial,
            });
        }
        let a: Vec<T> = d.entries().iter().map(|&x| T::of(f64::from(x))).collect();
        let tol = self.tol::<T>();
        let (mut x, mut iterations, method) = if n <= DENSE_LIMIT {
            let (x, sweeps) = jacobi_top_vector(&a, n);
            (x, sweeps, Method::Jacobi)
        } else {
            let mut x: Vec<T> = d.transmissions().iter().map(|&t| T::of(t as f64)).collect();
            normalize(&mut x);
            (x, 0, Method::ShiftedPower)
        };
        let shift = T::of(d.tr_max() as f64);
        let budget = 20_000;
        loop {
            orient(&mut x);
            let rho = quadratic_form(&a, n, &x);
            let residual = residual_inf(&a, n, rho, &x);
            let scale = if rho > T::one() { rho } else { T::one() };
            let positive = x.iter().all(|&v| v > T::zero());
            if residual <= tol * scale && positive {
                return Ok(SpectralResult {
                    rho,
                    perron: x,
                    residual,
                    iterations,
                    method,
                });
            }
            if iterations >= budget {
                return Err(Error::NoConvergence {
                    iterations,
                    residual: residual.to_f64_lossy(),
                });
            }
            // Polish (dense) or iterate (large n) with the shifted operator.
            let mut y = mat_vec(&a, n, &x);
            for (yi, &xi) in y.iter_mut().zip(&x) {
                *yi = *yi + shift * xi;
            }
            normalize(&mut y);
            x = y;
            iterations += 1;
        }
    }
}

/// Largest eigenvalue and Perron vector of `D(g)` at the default tolerance.
pub fn distance_spectral_radius<T: Scalar>(g: &Graph) -> Result<SpectralResult<T>> {
    Solver::default().spectral_radius(g)
}

pub fn perron_pair<T: Scalar>(d: &DistanceMatrix) -> Result<SpectralResult<T>> {
    Solver::default().perron_pair(d)
}

fn mat_vec<T: Scalar>(a: &[T], n: usize, x: &[T]) -> Vec<T> {
    a.chunks(n)
        .map(|row| row.iter().zip(x).fold(T::zero(), |acc, (&d, &xi)| acc + d * xi))
        .collect()
}

fn quadratic_form<T: Scalar>(a: &[T], n: usize, x: &[T]) -> T {
    mat_vec(a, n, x)
        .iter()
        .zip(x)
        .fold(T::zero(), |acc, (&y, &xi)| acc + y * xi)
}

fn residual_inf<T: Scalar>(a: &[T], n: usize, rho: T, x: &[T]) -> T {
    mat_vec(a, n, x)
        .iter()
        .zip(x)
        .fold(T::zero(), |acc, (&y, &xi)| acc.max((y - rho * xi).abs()))
}

fn normalize<T: Scalar>(x: &mut [T]) {
    let norm = x.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
    for v in x.iter_mut() {
        *v = *v / norm;
    }
}

fn orient<T: Scalar>(x: &mut [T]) {
    let sum = x.iter().fold(T::zero(), |acc, &v| acc + v);
    if sum < T::zero() {
        for v in x.iter_mut() {
            *v = -*v;
        }
    }
}

/// Cyclic Jacobi on a dense symmetric matrix; returns the unit eigenvector of
/// the largest eigenvalue and the number of sweeps.
fn jacobi_top_vector<T: Scalar>(a: &[T], n: usize) -> (Vec<T>, usize) {
    let mut a = a.to_vec();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let frob = a.iter().fold(T::zero(), |acc, &x| acc + x * x);
    let eps = T::epsilon();
    let two = T::of(2.0);
    let mut sweeps = 0;
    while sweeps < 64 {
        let off = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .fold(T::zero(), |acc, (p, q)| acc + a[p * n + q] * a[p * n + q]);
        if off <= eps * eps * frob {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (two * apq);
                let t = tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let top = (0..n)
        .max_by(|&i, &j| {
            a[i * n + i]
                .partial_cmp(&a[j * n + j])
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or(0);
    let mut x: Vec<T> = (0..n).map(|k| v[k * n + top]).collect();
    normalize(&mut x);
    (x, sweeps)
}

fn check_vector<T: Scalar>(d: &DistanceMatrix, x: &[T]) -> Result<()> {
    if x.len() != d.order() {
        return Err(Error::DimensionMismatch {
            expected: d.order(),
            got: x.len(),
        });
    }
    Ok(())
}

/// `xᵀ D x = Σ_{u<v} 2·d(u,v)·x_u·x_v` for a unit `x` with a nonnegative entry.
pub fn rayleigh<T: Scalar>(d: &DistanceMatrix, x: &[T]) -> Result<T> {
    check_vector(d, x)?;
    let norm = x.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
    if (norm - T::one()).abs() > T::of(T::RESIDUAL_TOL) {
        return Err(Error::NonUnitVector {
            norm: norm.to_f64_lossy(),
        });
    }
    if !x.iter().any(|&v| v >= T::zero()) {
        return Err(Error::NegativeVector);
    }
    let n = d.order();
    let two = T::of(2.0);
    let mut sum = T::zero();
    for u in 0..n {
        for v in u + 1..n {
            sum = sum + two * T::of(f64::from(d.get(u, v))) * x[u] * x[v];
        }
    }
    Ok(sum)
}

/// `ρ·x_u − Σ_v d(u,v)·x_v`.
pub fn eigenequation_residual<T: Scalar>(d: &DistanceMatrix, rho: T, x: &[T], u: usize) -> Result<T> {
    check_vector(d, x)?;
    let s = d
        .row(u)
        .iter()
        .zip(x)
        .fold(T::zero(), |acc, (&duv, &xv)| acc + T::of(f64::from(duv)) * xv);
    Ok(rho * x[u] - s)
}

/// True iff the Perron entries are constant on every orbit within `10·tol`.
pub fn perron_orbit_check<T: Scalar>(g: &Graph, result: &SpectralResult<T>, orbits: &[Vec<usize>]) -> bool {
    if result.perron.len() != g.order() {
        return false;
    }
    let tol = T::of(10.0 * T::RESIDUAL_TOL);
    orbits.iter().all(|orbit| match orbit.first() {
        None => true,
        Some(&first) => {
            let x0 = result.perron[first];
            orbit
                .iter()
                .all(|&v| v < g.order() && (result.perron[v] - x0).abs() <= tol)
        }
    })
}

/// Two radii are distinguishable only when they differ by more than this.
///
/// Ten times the summed residuals, floored at a few ulps of accumulated
/// rounding in the quadratic form so that exact-zero residuals do not make
/// the threshold vanish.
pub fn strict_gap_threshold(a: &SpectralResult<f64>, b: &SpectralResult<f64>) -> f64 {
    let n = a.perron.len().max(b.perron.len()) as f64;
    let scale = a.rho.abs().max(b.rho.abs()).max(1.0);
    10.0 * (a.residual + b.residual) + 16.0 * n * f64::EPSILON * scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn rho_of(s: &str) -> SpectralResult<f64> {
        distance_spectral_radius(&s.parse::<FamilySpec>().unwrap().construct().unwrap()).unwrap()
    }

    #[test]
    fn complete_and_cycle_exact() {
        for n in 2..20 {
            let r = rho_of(&format!("k{n}"));
            assert!((r.rho - (n as f64 - 1.0)).abs() < 1e-9);
        }
        assert!((rho_of("c5").rho - 6.0).abs() < 1e-9);
        assert!((rho_of("c6").rho - 9.0).abs() < 1e-9);
    }

    #[test]
    fn single_vertex() {
        let r = rho_of("k1");
        assert_eq!(r.rho, 0.0);
        assert_eq!(r.perron, vec![1.0]);
        assert_eq!(r.method, Method::Trivial);
    }

    #[test]
    fn table_and_text_values() {
        assert!((rho_of("pnc:9,2").rho - 9.5782).abs() < 5e-4);
        assert!((rho_of("complement(union(c3,p2,p2))").rho - 7.4641).abs() < 5e-4);
        assert!((rho_of("pnc:7,2").rho - 7.4553).abs() < 5e-4);
    }

    #[test]
    fn result_invariants() {
        let r = rho_of("btree:9");
        let norm: f64 = r.perron.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(r.perron.iter().all(|&x| x > 0.0));
        assert!(r.residual <= 1e-9 * r.rho.max(1.0));
    }

    #[test]
    fn f32_solver_agrees() {
        let g = FamilySpec::Pnc { n: 9, c: 2 }.construct().unwrap();
        let r32 = distance_spectral_radius::<f32>(&g).unwrap();
        let r64 = distance_spectral_radius::<f64>(&g).unwrap();
        assert!((f64::from(r32.rho) - r64.rho).abs() < 1e-3);
    }

    #[test]
    fn shifted_power_matches_jacobi() {
        // Force both paths on the same matrix by comparing a large graph to
        // its closed form and a mid-size graph across solvers.
        let g = FamilySpec::Cycle(101).construct().unwrap();
        let r = distance_spectral_radius::<f64>(&g).unwrap();
        assert_eq!(r.method, Method::ShiftedPower);
        assert!((r.rho - 2550.0).abs() < 1e-6);
        let g = FamilySpec::Complete(80).construct().unwrap();
        assert!((distance_spectral_radius::<f64>(&g).unwrap().rho - 79.0).abs() < 1e-9);
        let p = FamilySpec::Path(70).construct().unwrap();
        let r = distance_spectral_radius::<f64>(&p).unwrap();
        assert!(r.residual <= 1e-9 * r.rho);
    }

    #[test]
    fn rayleigh_cases() {
        let g = FamilySpec::Complete(5).construct().unwrap();
        let d = distances(&g).unwrap();
        let u = vec![1.0 / 5f64.sqrt(); 5];
        assert!((rayleigh(&d, &u).unwrap() - 4.0).abs() < 1e-12);
        assert!(matches!(rayleigh(&d, &[1.0; 5]), Err(Error::NonUnitVector { .. })));
        assert_eq!(rayleigh(&d, &[-u[0]; 5]), Err(Error::NegativeVector));
        assert!(matches!(rayleigh(&d, &[1.0]), Err(Error::DimensionMismatch { .. })));

        let g = FamilySpec::Pnc { n: 8, c: 4 }.construct().unwrap();
        let d = distances(&g).unwrap();
        let r = perron_pair::<f64>(&d).unwrap();
        let u = vec![1.0 / 8f64.sqrt(); 8];
        assert!((rayleigh(&d, &u).unwrap() - r.rho).abs() < 1e-9);
        assert!((rayleigh(&d, &r.perron).unwrap() - r.rho).abs() < 1e-9);
    }

    #[test]
    fn eigenequation_cases() {
        let k3 = distances(&Graph::complete(3).unwrap()).unwrap();
        let u = vec![1.0 / 3f64.sqrt(); 3];
        assert_eq!(eigenequation_residual(&k3, 2.0, &u, 0).unwrap(), 0.0);

        let p3 = distances(&FamilySpec::Path(3).construct().unwrap()).unwrap();
        let rq = rayleigh(&p3, &u).unwrap();
        assert!((rq - 8.0 / 3.0).abs() < 1e-12);
        let center = eigenequation_residual(&p3, rq, &u, 1).unwrap();
        assert!((center - (8.0 / 3.0 - 2.0) / 3f64.sqrt()).abs() < 1e-12);
        assert!(center.abs() > 0.1);

        let r = perron_pair::<f64>(&p3).unwrap();
        for v in 0..3 {
            assert!(eigenequation_residual(&p3, r.rho, &r.perron, v).unwrap().abs() < 1e-9 * r.rho);
        }
    }

    #[test]
    fn orbit_check_star() {
        let g = FamilySpec::Star(5).construct().unwrap();
        let r = distance_spectral_radius::<f64>(&g).unwrap();
        assert!(perron_orbit_check(&g, &r, &[vec![0], vec![1, 2, 3, 4]]));
        assert!(!perron_orbit_check(&g, &r, &[vec![0, 1, 2, 3, 4]]));
        // Quotient 2×2 system: ρ x_c = 4 x_l, ρ x_l = x_c + 6 x_l.
        let rho = 3.0 + 13f64.sqrt();
        assert!((r.rho - rho).abs() < 1e-9);
        assert!((r.perron[0] / r.perron[1] - 4.0 / rho).abs() < 1e-9);
    }

    #[test]
    fn deterministic() {
        let g = FamilySpec::BTree(11).construct().unwrap();
        let a = distance_spectral_radius::<f64>(&g).unwrap();
        let b = distance_spectral_radius::<f64>(&g).unwrap();
        assert_eq!(a.rho.to_bits(), b.rho.to_bits());
        assert_eq!(a.perron, b.perron);
    }
}
