//! Rendering of command results in the three output formats.

use anyhow::Result;
use distspec::charpoly::OracleCase;
use distspec::extremal::{ExtremalReport, PropertyReport};
use serde::Serialize;

use crate::config::{Format, RunConfig};

/// Run metadata written alongside every verification result.
#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    holds: bool,
    seed: u64,
    solver_tolerance: f64,
    tolerance_overridden: bool,
    results: &'a T,
}

fn json<T: Serialize>(cfg: &RunConfig, command: &str, holds: bool, results: &T) -> Result<String> {
    let env = Envelope {
        command,
        holds,
        seed: cfg.seed,
        solver_tolerance: cfg.solver_tolerance(),
        tolerance_overridden: cfg.tol.is_some(),
        results,
    };
    Ok(serde_json::to_string_pretty(&env)? + "\n")
}

fn csv_rows<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn extremal(cfg: &RunConfig, command: &str, reports: &[ExtremalReport], text_rows: usize) -> Result<String> {
    let holds = reports.iter().all(|r| r.holds);
    Ok(match cfg.format {
        Format::Json => json(cfg, command, holds, &reports)?,
        Format::Csv => {
            // One header for the whole run.
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                let csv = r.to_csv();
                let body = if i == 0 {
                    &csv[..]
                } else {
                    csv.split_once('\n').map_or("", |(_, b)| b)
                };
                out.push_str(body);
            }
            out
        }
        Format::Text => {
            let parts: Vec<String> = reports.iter().map(|r| r.to_text(text_rows)).collect();
            parts.join("\n")
        }
    })
}

pub fn oracle(cfg: &RunConfig, cases: &[OracleCase]) -> Result<String> {
    let holds = cases.iter().all(|c| c.passed);
    Ok(match cfg.format {
        Format::Json => json(cfg, "verify charpoly", holds, &cases)?,
        Format::Csv => csv_rows(cases)?,
        Format::Text => {
            let mut s = String::from("   n   c        ρ(H)       ρ(H′)   P_H′(ρ(H))  max |root − ρ|\n");
            for c in cases {
                let err = (c.root_h - c.rho_h).abs().max((c.root_h_prime - c.rho_h_prime).abs());
                s += &format!(
                    "{:>4} {:>3} {:>11.6} {:>11.6} {:>12.4e} {:>15.2e}{}\n",
                    c.n,
                    c.c,
                    c.rho_h,
                    c.rho_h_prime,
                    c.h_prime_at_rho_h,
                    err,
                    if c.passed { "" } else { "  FAIL" }
                );
            }
            s + &format!(
                "{} case(s): {}\n",
                cases.len(),
                if holds { "holds" } else { "VIOLATED" }
            )
        }
    })
}

#[derive(Serialize)]
struct PropertyRow<'a> {
    name: &'a str,
    cases: usize,
    failures: usize,
    passed: bool,
}

pub fn properties(cfg: &RunConfig, reports: &[PropertyReport]) -> Result<String> {
    let holds = reports.iter().all(|r| r.passed);
    Ok(match cfg.format {
        Format::Json => json(cfg, "verify lemmas", holds, &reports)?,
        Format::Csv => csv_rows(reports.iter().map(|r| PropertyRow {
            name: &r.name,
            cases: r.cases,
            failures: r.failures.len(),
            passed: r.passed,
        }))?,
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let mark = if r.passed { "ok  " } else { "FAIL" };
                s += &format!("[{mark}] {} ({} cases)\n", r.name, r.cases);
                for f in r.failures.iter().take(5) {
                    s += &format!("       {f}\n");
                }
            }
            s + if holds { "holds\n" } else { "VIOLATED\n" }
        }
    })
}

/// Any serializable value; CSV and text fall back to the given renderer.
pub fn plain<T: Serialize>(cfg: &RunConfig, value: &T, text: impl FnOnce() -> String) -> Result<String> {
    Ok(match cfg.format {
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
        Format::Csv => csv_rows([value])?,
        Format::Text => text(),
    })
}
