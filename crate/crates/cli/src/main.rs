//! `distspec`: distance spectral radius computations and extremal checks.
//!
//! Exit status is 0 when everything in scope holds, 2 when a claim is
//! violated (the offending graph6 goes to stderr) and 1 on any error.

mod config;
mod input;
mod output;
mod params;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use distspec::charpoly::oracle_case;
use distspec::corpus::corpus;
use distspec::enumeration::{canonical, EnumLimits, EnumScope};
use distspec::extremal::{lemmas, ExtremalReport, PropertyReport};
use distspec::{distances, from_graph6, to_graph6, Method};
use serde::Serialize;

use config::{Format, RunConfig};
use params::Params;

#[derive(Parser)]
#[command(
    name = "distspec",
    version,
    about = "Distance spectral radius of graphs and extremal verification"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = 20240607)]
    seed: u64,
    /// Worker threads for enumeration and ranking (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Eigensolver residual tolerance (default 1e-9).
    #[arg(long, global = true, allow_negative_numbers = true)]
    tol: Option<f64>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for cached enumerations.
    #[arg(long, global = true, env = "DISTSPEC_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Largest m enumerated over all orders.
    #[arg(long, global = true, default_value_t = EnumLimits::HARD.by_size_m)]
    limit_size_m: usize,
    /// Largest order enumerated at fixed order and size.
    #[arg(long, global = true, default_value_t = EnumLimits::HARD.by_order_size_n)]
    limit_order_n: usize,
    /// Largest order of enumerated forests.
    #[arg(long, global = true, default_value_t = EnumLimits::HARD.forests_n)]
    limit_forest_n: usize,
    /// Largest order of the structured candidate search.
    #[arg(long, global = true, default_value_t = EnumLimits::HARD.structured_n)]
    limit_structured_n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius, residual, transmission bounds and regularity of one graph.
    Rho {
        /// graph6 string, family spec such as `pnc:9,2`, or a file (edge-list JSON or graph6).
        input: String,
    },
    /// Check an extremal result or property suite over a parameter range.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// `key=value` or `key=lo..hi`.
        params: Vec<String>,
    },
    /// The two structured-candidate tables for n = 9 and n = 10 with s = 1.
    Tables,
    /// Structured search below the proven range: `m=…` or `n=… s=…`.
    Conjecture { params: Vec<String> },
    /// List one graph per isomorphism class, in graph6.
    Enumerate {
        #[arg(value_enum)]
        mode: Mode,
        params: Vec<String>,
    },
    /// Canonical graph6 and automorphism orbits (order ≤ 14).
    Canon { input: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Claim {
    /// Maximum over connected graphs with m edges: `m=5..9`.
    Max,
    /// Structure of the minimizer: `m=…` or `n=… [s=…]`.
    MinStructure,
    /// `P_{n,s+1}` is the unique minimizer: `m=…` or `n=… [s=…]`.
    MinIdentity,
    /// Extremes over forest complements: `n=6..10 c=2..4`.
    Forests,
    /// Closed-form roots against the eigensolver: `n=5..30 [c=…]`.
    Charpoly,
    /// Seeded lemma suites: `[pairs=200] [corpus=500] [max-n=12] [shift-n=8]`.
    Lemmas,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    /// `m=… [max-n=…]`
    BySize,
    /// `n=… m=…`
    ByOrderSize,
    /// `n=… c=…`
    Forests,
    /// `n=… s=…`
    Structured,
}

enum Status {
    Holds,
    Violated(String),
}

fn main() -> ExitCode {
    // Usage errors exit with 1 like any other error; 2 is reserved for violations.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(Status::Holds) => ExitCode::SUCCESS,
        Ok(Status::Violated(witness)) => {
            eprintln!("violation: {witness}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    let g = cli.global;
    let cfg = RunConfig {
        tol: g.tol,
        limits: EnumLimits {
            by_size_m: g.limit_size_m,
            by_order_size_n: g.limit_order_n,
            forests_n: g.limit_forest_n,
            structured_n: g.limit_structured_n,
        },
        workers: g.workers,
        format: g.format,
        cache_dir: g.cache_dir,
        seed: g.seed,
    };
    cfg.validate()?;
    let (text, status) = match cli.command {
        Command::Rho { input } => rho(&cfg, &input)?,
        Command::Verify { claim, params } => verify(&cfg, claim, &params)?,
        Command::Tables => {
            let reports = cfg.verifier().tables()?;
            (
                output::extremal(&cfg, "tables", &reports, usize::MAX)?,
                extremal_status(&reports),
            )
        }
        Command::Conjecture { params } => {
            let p = Params::parse(&params, &["m", "n", "s"])?;
            let sizes = sizes(&p, |n| 1..=(n.saturating_sub(6) / 2))?;
            let v = cfg.verifier();
            let reports = sizes
                .into_iter()
                .map(|m| v.conjecture_explore(m))
                .collect::<distspec::Result<Vec<_>>>()?;
            (
                output::extremal(&cfg, "conjecture", &reports, 10)?,
                extremal_status(&reports),
            )
        }
        Command::Enumerate { mode, params } => (enumerate(&cfg, mode, &params)?, Status::Holds),
        Command::Canon { input } => (canon(&cfg, &input)?, Status::Holds),
    };
    emit(g.out.as_deref(), &text)?;
    Ok(status)
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn extremal_status(reports: &[ExtremalReport]) -> Status {
    match reports.iter().find(|r| !r.holds) {
        None => Status::Holds,
        Some(r) => Status::Violated(r.violation.clone().unwrap_or_else(|| r.claim.clone())),
    }
}

/// Sizes from `m=…`, or from `n=…` with `s=…` defaulting to `default_s(n)`.
fn sizes(p: &Params, default_s: impl Fn(usize) -> std::ops::RangeInclusive<usize>) -> Result<Vec<usize>> {
    match (p.range("m"), p.range("n")) {
        (Some(_), Some(_)) => bail!("give either m=… or n=…, not both"),
        (Some(m), None) => {
            if p.range("s").is_some() {
                bail!("s=… goes with n=…, not m=…");
            }
            Ok(m.collect())
        }
        (None, Some(ns)) => {
            let mut out = Vec::new();
            for n in ns {
                if n < 2 {
                    bail!("n must be at least 2");
                }
                for s in p.range("s").unwrap_or_else(|| default_s(n)) {
                    if s == 0 || s > n - 1 {
                        bail!("s = {s} is outside 1..={} for n = {n}", n - 1);
                    }
                    out.push((n - 1) * (n - 2) / 2 + s);
                }
            }
            Ok(out)
        }
        (None, None) => bail!("missing m=… or n=…"),
    }
}

fn verify(cfg: &RunConfig, claim: Claim, raw: &[String]) -> Result<(String, Status)> {
    let v = cfg.verifier();
    match claim {
        Claim::Max => {
            let p = Params::parse(raw, &["m"])?;
            let reports = p
                .range("m")
                .unwrap_or(5..=9)
                .map(|m| v.verify_max_over_size(m))
                .collect::<distspec::Result<Vec<_>>>()?;
            Ok((
                output::extremal(cfg, "verify max", &reports, 5)?,
                extremal_status(&reports),
            ))
        }
        Claim::MinStructure | Claim::MinIdentity => {
            let p = Params::parse(raw, &["m", "n", "s"])?;
            let identity = matches!(claim, Claim::MinIdentity);
            let ms = sizes(&p, |n| {
                let lo = if identity {
                    n.saturating_sub(6).div_ceil(2).max(1)
                } else {
                    1
                };
                lo..=n - 1
            })?;
            let reports = ms
                .into_iter()
                .map(|m| {
                    if identity {
                        v.verify_min_identity(m)
                    } else {
                        v.verify_min_structure(m)
                    }
                })
                .collect::<distspec::Result<Vec<_>>>()?;
            let name = if identity {
                "verify min-identity"
            } else {
                "verify min-structure"
            };
            Ok((output::extremal(cfg, name, &reports, 5)?, extremal_status(&reports)))
        }
        Claim::Forests => {
            let p = Params::parse(raw, &["n", "c"])?;
            let mut reports = Vec::new();
            for n in p.range("n").unwrap_or(6..=10) {
                for c in p.range("c").unwrap_or(2..=4) {
                    if c + 2 <= n {
                        reports.push(v.verify_forest_extremal(n, c)?);
                    }
                }
            }
            if reports.is_empty() {
                bail!("no (n, c) with 2 ≤ c ≤ n − 2 in range");
            }
            Ok((
                output::extremal(cfg, "verify forests", &reports, 5)?,
                extremal_status(&reports),
            ))
        }
        Claim::Charpoly => {
            let p = Params::parse(raw, &["n", "c"])?;
            let solver = cfg.solver();
            let mut cases = Vec::new();
            for n in p.range("n").unwrap_or(5..=30) {
                let cs = p.range("c").unwrap_or(2..=n.saturating_sub(3));
                for c in cs.filter(|&c| c >= 2 && c + 3 <= n) {
                    cases.push(oracle_case(&solver, n as i64, c as i64, 1e-8)?);
                }
            }
            if cases.is_empty() {
                bail!("no (n, c) with 2 ≤ c ≤ n − 3 in range");
            }
            let status = match cases.iter().find(|c| !c.passed) {
                None => Status::Holds,
                Some(c) => {
                    let h = distspec::charpoly::QuotientPolynomial::h_prime(c.n, c.c).target_graph()?;
                    Status::Violated(to_graph6(&h))
                }
            };
            Ok((output::oracle(cfg, &cases)?, status))
        }
        Claim::Lemmas => {
            let p = Params::parse(raw, &["pairs", "corpus", "max-n", "shift-n"])?;
            let pairs = p.single("pairs")?.unwrap_or(200);
            let size = p.single("corpus")?.unwrap_or(500);
            let max_n = p.single("max-n")?.unwrap_or(12);
            let shift_n = p.single("shift-n")?.unwrap_or(8);
            if !(3..=62).contains(&max_n) {
                bail!("max-n must lie in 3..=62");
            }
            if shift_n > EnumLimits::HARD.forests_n.min(cfg.limits.forests_n) {
                bail!("shift-n exceeds the forest enumeration limit");
            }
            let solver = cfg.solver();
            let c = corpus(cfg.seed, size);
            let reports = v.install(|| {
                Ok(vec![
                    lemmas::monotonicity(&solver, cfg.seed, pairs, max_n)?,
                    lemmas::sandwich(&solver, &c, 1e-8)?,
                    lemmas::orbit_constancy(&solver, &c)?,
                    lemmas::shift_lemma(&solver, shift_n)?,
                    lemmas::tree_chain(&solver, 5..=40)?,
                    lemmas::exact_values(&solver, 40, 1e-9)?,
                ])
            })?;
            Ok((output::properties(cfg, &reports)?, property_status(&reports)))
        }
    }
}

fn property_status(reports: &[PropertyReport]) -> Status {
    let Some(first) = reports.iter().find_map(|r| r.failures.first()) else {
        return Status::Holds;
    };
    // Failure lines lead with the graph6 string when there is one.
    let token = first.split_whitespace().next().unwrap_or("");
    if from_graph6(token).is_ok() {
        Status::Violated(token.to_string())
    } else {
        Status::Violated(first.clone())
    }
}

#[derive(Serialize)]
struct RhoOutput {
    source: String,
    graph6: String,
    order: usize,
    size: usize,
    rho: f64,
    residual: f64,
    method: Method,
    lower_bound: f64,
    upper_bound: f64,
    transmission_regular: bool,
    wiener_index: u64,
}

fn rho(cfg: &RunConfig, source: &str) -> Result<(String, Status)> {
    let (g, label) = input::read_graph(source)?;
    if !g.is_connected() {
        bail!("{label} is disconnected; the distance matrix is undefined");
    }
    let d = distances(&g)?;
    let r = cfg.solver().perron_pair::<f64>(&d)?;
    let b = d.spectral_bounds::<f64>();
    let out = RhoOutput {
        source: label,
        graph6: to_graph6(&g),
        order: g.order(),
        size: g.size(),
        rho: r.rho,
        residual: r.residual,
        method: r.method,
        lower_bound: b.lower,
        upper_bound: b.upper,
        transmission_regular: d.is_transmission_regular(),
        wiener_index: d.wiener(),
    };
    let text = output::plain(cfg, &out, || {
        format!(
            "{} (n = {}, m = {})\nrho = {:.6}\nresidual = {:.3e}\nbounds = [{:.6}, {:.6}]\ntransmission regular = {}\n",
            out.source,
            out.order,
            out.size,
            out.rho,
            out.residual,
            out.lower_bound,
            out.upper_bound,
            out.transmission_regular
        )
    })?;
    Ok((text, Status::Holds))
}

fn enumerate(cfg: &RunConfig, mode: Mode, raw: &[String]) -> Result<String> {
    let scope = match mode {
        Mode::BySize => {
            let p = Params::parse(raw, &["m", "max-n"])?;
            EnumScope::BySize {
                m: p.single("m")?.context("missing m=…")?,
                max_n: p.single("max-n")?,
            }
        }
        Mode::ByOrderSize => {
            let p = Params::parse(raw, &["n", "m"])?;
            EnumScope::ByOrderSize {
                n: p.single("n")?.context("missing n=…")?,
                m: p.single("m")?.context("missing m=…")?,
            }
        }
        Mode::Forests => {
            let p = Params::parse(raw, &["n", "c"])?;
            EnumScope::Forests {
                n: p.single("n")?.context("missing n=…")?,
                c: p.single("c")?.context("missing c=…")?,
            }
        }
        Mode::Structured => {
            let p = Params::parse(raw, &["n", "s"])?;
            EnumScope::StructuredMin {
                n: p.single("n")?.context("missing n=…")?,
                s: p.single("s")?.context("missing s=…")?,
            }
        }
    };
    let enumerator = cfg.enumerator();
    let graphs: Vec<String> = cfg
        .verifier()
        .install(|| Ok(enumerator.enumerate(scope)?.map(|g| to_graph6(&g)).collect()))?;
    Ok(match cfg.format {
        Format::Json => serde_json::to_string_pretty(&graphs)? + "\n",
        Format::Csv => std::iter::once("graph6".to_string())
            .chain(graphs)
            .map(|s| s + "\n")
            .collect(),
        Format::Text => graphs.into_iter().map(|s| s + "\n").collect(),
    })
}

#[derive(Serialize)]
struct CanonOutput {
    source: String,
    canonical_graph6: String,
    labeling: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

fn canon(cfg: &RunConfig, source: &str) -> Result<String> {
    let (g, label) = input::read_graph(source)?;
    let cf = canonical(&g)?;
    let out = CanonOutput {
        source: label,
        canonical_graph6: cf.graph6(),
        labeling: cf.labeling().to_vec(),
        orbits: cf.orbits(),
    };
    let orbit_text = || {
        out.orbits
            .iter()
            .map(|o| format!("{{{}}}", o.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(match cfg.format {
        Format::Json => serde_json::to_string_pretty(&out)? + "\n",
        Format::Csv => format!(
            "source,canonical_graph6,orbits\n{},{},{}\n",
            csv_field(&out.source),
            out.canonical_graph6,
            orbit_text()
        ),
        Format::Text => format!(
            "{}\ncanonical = {}\norbits = {}\n",
            out.source,
            out.canonical_graph6,
            orbit_text()
        ),
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use distspec::order_for_size;

    fn p(args: &[&str]) -> Params {
        let a: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        Params::parse(&a, &["m", "n", "s"]).unwrap()
    }

    #[test]
    fn sizes_from_order() {
        assert_eq!(sizes(&p(&["n=9", "s=1"]), |_| 1..=1).unwrap(), vec![29]);
        assert_eq!(sizes(&p(&["n=4"]), |n| 1..=n - 1).unwrap(), vec![4, 5, 6]);
        assert_eq!(sizes(&p(&["m=3..4"]), |_| 1..=1).unwrap(), vec![3, 4]);
        assert!(sizes(&p(&["n=4", "s=4"]), |_| 1..=1).is_err());
        assert!(sizes(&p(&["m=4", "n=4"]), |_| 1..=1).is_err());
        for m in 1..40 {
            let (n, s) = order_for_size(m);
            assert_eq!(
                sizes(&p(&[&format!("n={n}"), &format!("s={s}")]), |_| 1..=1).unwrap(),
                vec![m]
            );
        }
    }

    #[test]
    fn property_failures_surface_their_graph6() {
        let report = |failures: Vec<String>| PropertyReport {
            name: "x".into(),
            cases: 1,
            passed: failures.is_empty(),
            failures,
        };
        assert!(matches!(property_status(&[report(vec![])]), Status::Holds));
        match property_status(&[report(vec![]), report(vec!["D~{ + 01: 4 vs 5".into()])]) {
            Status::Violated(w) => assert_eq!(w, "D~{"),
            Status::Holds => panic!("failure not reported"),
        }
        match property_status(&[report(vec!["m = 7: 1 !< 0".into()])]) {
            Status::Violated(w) => assert_eq!(w, "m = 7: 1 !< 0"),
            Status::Holds => panic!("failure not reported"),
        }
    }

    #[test]
    fn extremal_violation_carries_witness() {
        let mut r = distspec::extremal::verify_forest_extremal(6, 2).unwrap();
        assert!(matches!(extremal_status(std::slice::from_ref(&r)), Status::Holds));
        r.holds = false;
        r.violation = Some("E?Bw".into());
        match extremal_status(&[r]) {
            Status::Violated(w) => assert_eq!(w, "E?Bw"),
            Status::Holds => panic!("violation not reported"),
        }
    }
}
