//! Verification drivers for the extremal results and the structured search
//! behind the conjectured minimizer.

pub mod drivers;
pub mod lemmas;
pub mod rank;
pub mod report;

use std::time::Instant;

use crate::enumeration::Enumerator;
use crate::error::{Error, Result};
use crate::spectral::Solver;

pub use drivers::{
    conjecture_explore, rank_structured, tables, verify_forest_extremal, verify_max_over_size, verify_min_identity,
    verify_min_structure,
};
pub use lemmas::PropertyReport;
pub use rank::{compare, Recognizer, Verdict};
pub use report::{Audit, Direction, ExtremalReport, RankedEntry, TieMember, TieResolution};

/// Orders searched exhaustively by the minimizer drivers.
pub const EXHAUSTIVE_MIN_ORDER: usize = 10;

/// Largest `m` for which the maximum over connected size-`m` graphs is
/// checked exhaustively; beyond it only the three trees are compared.
pub const EXHAUSTIVE_MAX_SIZE: usize = 9;

/// Shared settings of every driver.
#[derive(Clone, Debug, Default)]
pub struct Verifier {
    pub solver: Solver,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub enumerator: Enumerator,
    /// Record wall time in reports. Off by default so that reports of
    /// identical runs are byte-identical.
    pub record_wall_time: bool,
}

impl Verifier {
    /// Runs `f` on a pool with the configured worker count.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
        match self.workers {
            None => f(),
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Io(format!("worker pool: {e}")))?
                .install(f),
        }
    }

    pub(crate) fn timed(&self, start: Instant, report: &mut ExtremalReport) {
        if self.record_wall_time {
            report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
    }

    pub(crate) fn tolerance(&self) -> (f64, bool) {
        match self.solver.residual_tol {
            Some(t) => (t, true),
            None => (<f64 as crate::scalar::Scalar>::RESIDUAL_TOL, false),
        }
    }
}
