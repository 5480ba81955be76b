//! Ranked results of an extremal search and their JSON, CSV and text forms.

use std::fmt::Write as _;
use std::io;

use serde::Serialize;

use crate::enumeration::CanonicalKey;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Largest `ρ` first.
    Descending,
    /// Smallest `ρ` first.
    Ascending,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankedEntry {
    /// graph6 of the canonically labeled graph (of the graph as built when
    /// the order is too large to canonicalize).
    pub graph6: String,
    pub family: Option<String>,
    pub order: usize,
    pub size: usize,
    pub rho: f64,
    pub residual: f64,
    #[serde(skip)]
    pub key: Option<CanonicalKey>,
    #[serde(skip)]
    pub graph: Graph,
}

impl RankedEntry {
    pub fn name(&self) -> &str {
        self.family.as_deref().unwrap_or(&self.graph6)
    }
}

/// How a member of the tie set relates to the winner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TieResolution {
    Winner,
    /// Same `ρ`, certified by exact arithmetic.
    ExactTie,
    /// Within the float gap and not separable by the exact certificates.
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct TieMember {
    pub graph6: String,
    pub rho: f64,
    pub resolution: TieResolution,
}

/// One checked claim.
#[derive(Clone, Debug, Serialize)]
pub struct Audit {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Audit {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Audit {
            name: name.into(),
            passed,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, graph6: Option<String>) -> Self {
        if !self.passed {
            self.witness = graph6;
        }
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub claim: String,
    pub scope: String,
    pub direction: Direction,
    pub candidates: usize,
    pub ranking: Vec<RankedEntry>,
    /// The winner and every graph not certified strictly worse than it.
    pub tie_set: Vec<TieMember>,
    /// Comparisons that fell inside the float gap and were settled exactly.
    pub exact_comparisons: usize,
    pub audits: Vec<Audit>,
    pub holds: bool,
    /// graph6 of the first graph witnessing a failed audit.
    pub violation: Option<String>,
    pub solver_tolerance: f64,
    pub tolerance_overridden: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl ExtremalReport {
    pub fn winner(&self) -> Option<&RankedEntry> {
        self.ranking.first()
    }

    pub fn unique_winner(&self) -> bool {
        self.tie_set.len() == 1
    }

    pub fn audit(&self, name: &str) -> Option<&Audit> {
        self.audits.iter().find(|a| a.name == name)
    }

    pub fn entry_by_family(&self, family: &str) -> Option<&RankedEntry> {
        self.ranking.iter().find(|e| e.family.as_deref() == Some(family))
    }

    pub(crate) fn finish(&mut self) {
        self.holds = self.audits.iter().all(|a| a.passed);
        self.violation = self.audits.iter().filter(|a| !a.passed).find_map(|a| a.witness.clone());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Header `graph6,family,rho,residual`, one ranked graph per row.
    pub fn write_csv<W: io::Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        let csv_err = |e: csv::Error| Error::Io(e.to_string());
        out.write_record(["graph6", "family", "rho", "residual"])
            .map_err(csv_err)?;
        for e in &self.ranking {
            let rho = format!("{:.12}", e.rho);
            let residual = format!("{:e}", e.residual);
            out.write_record([e.graph6.as_str(), e.family.as_deref().unwrap_or(""), &rho, &residual])
                .map_err(csv_err)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory succeeds");
        String::from_utf8(buf).expect("csv output is UTF-8")
    }

    /// Human-readable summary; `limit` caps the ranking rows shown.
    pub fn to_text(&self, limit: usize) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.claim);
        let _ = writeln!(s, "scope: {} ({} candidates)", self.scope, self.candidates);
        for (i, e) in self.ranking.iter().take(limit).enumerate() {
            let _ = writeln!(s, "{:>4}  {:.4}  {}", i + 1, e.rho, e.name());
        }
        if self.ranking.len() > limit {
            let _ = writeln!(s, "      … {} more", self.ranking.len() - limit);
        }
        for a in &self.audits {
            let mark = if a.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "[{mark}] {}: {}", a.name, a.detail);
        }
        let _ = writeln!(s, "{}", if self.holds { "holds" } else { "VIOLATED" });
        s
    }
}
