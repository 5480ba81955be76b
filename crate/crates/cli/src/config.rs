use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::ValueEnum;
use distspec::enumeration::{EnumLimits, Enumerator};
use distspec::extremal::Verifier;
use distspec::{Scalar, Solver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Everything a run depends on besides its command and parameters.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Residual tolerance override for the eigensolver.
    pub tol: Option<f64>,
    pub limits: EnumLimits,
    pub workers: Option<usize>,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    /// Seeds every randomized corpus.
    pub seed: u64,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(t) = self.tol {
            if !(t.is_finite() && t > 0.0) {
                bail!("--tol must be a positive finite number, got {t}");
            }
        }
        if self.workers == Some(0) {
            bail!("--workers must be at least 1");
        }
        let l = self.limits;
        EnumLimits::new(l.by_size_m, l.by_order_size_n, l.forests_n, l.structured_n)?;
        Ok(())
    }

    pub fn solver(&self) -> Solver {
        Solver { residual_tol: self.tol }
    }

    pub fn solver_tolerance(&self) -> f64 {
        self.tol.unwrap_or(<f64 as Scalar>::RESIDUAL_TOL)
    }

    pub fn enumerator(&self) -> Enumerator {
        Enumerator::new(self.limits, self.cache_dir.clone())
    }

    pub fn verifier(&self) -> Verifier {
        Verifier {
            solver: self.solver(),
            workers: self.workers,
            enumerator: self.enumerator(),
            record_wall_time: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> RunConfig {
        RunConfig {
            tol: None,
            limits: EnumLimits::HARD,
            workers: None,
            format: Format::Text,
            cache_dir: None,
            seed: 1,
        }
    }

    #[test]
    fn validation() {
        assert!(base().validate().is_ok());
        assert!(RunConfig {
            tol: Some(0.0),
            ..base()
        }
        .validate()
        .is_err());
        assert!(RunConfig {
            tol: Some(f64::NAN),
            ..base()
        }
        .validate()
        .is_err());
        assert!(RunConfig {
            workers: Some(0),
            ..base()
        }
        .validate()
        .is_err());
        let mut over = base();
        over.limits.by_size_m = 11;
        assert!(over.validate().is_err());
        let mut under = base();
        under.limits.forests_n = 8;
        assert!(under.validate().is_ok());
    }

    #[test]
    fn tolerance_default_and_override() {
        assert_eq!(base().solver_tolerance(), 1e-9);
        assert_eq!(
            RunConfig {
                tol: Some(1e-6),
                ..base()
            }
            .solver_tolerance(),
            1e-6
        );
    }
}
