//! `key=value` and `key=lo..hi` parameters for `verify` and friends.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use anyhow::{bail, Context, Result};

#[derive(Debug, Default)]
pub struct Params {
    values: BTreeMap<String, RangeInclusive<usize>>,
}

impl Params {
    pub fn parse(args: &[String], allowed: &[&str]) -> Result<Self> {
        let mut values = BTreeMap::new();
        for arg in args {
            let (key, val) = arg
                .split_once('=')
                .with_context(|| format!("expected key=value or key=lo..hi, got {arg:?}"))?;
            if !allowed.contains(&key) {
                bail!("unknown parameter {key:?}; expected one of {}", allowed.join(", "));
            }
            let range = parse_range(val).with_context(|| format!("bad value for {key}"))?;
            if values.insert(key.to_string(), range).is_some() {
                bail!("parameter {key} given twice");
            }
        }
        Ok(Params { values })
    }

    pub fn range(&self, key: &str) -> Option<RangeInclusive<usize>> {
        self.values.get(key).cloned()
    }

    /// A single value; ranges are rejected.
    pub fn single(&self, key: &str) -> Result<Option<usize>> {
        match self.range(key) {
            None => Ok(None),
            Some(r) if r.start() == r.end() => Ok(Some(*r.start())),
            Some(r) => bail!("{key} takes a single value, got {}..{}", r.start(), r.end()),
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo
        .trim()
        .parse()
        .with_context(|| format!("{lo:?} is not a nonnegative integer"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .with_context(|| format!("{hi:?} is not a nonnegative integer"))?;
    if lo > hi {
        bail!("empty range {lo}..{hi}");
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(a: &[&str]) -> Vec<String> {
        a.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn ranges_and_singles() {
        let p = Params::parse(&args(&["n=6..10", "c=3", "m=2..=4"]), &["n", "c", "m"]).unwrap();
        assert_eq!(p.range("n"), Some(6..=10));
        assert_eq!(p.single("c").unwrap(), Some(3));
        assert_eq!(p.range("m"), Some(2..=4));
        assert!(p.single("n").is_err());
        assert_eq!(p.range("s"), None);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Params::parse(&args(&["n"]), &["n"]).is_err());
        assert!(Params::parse(&args(&["x=1"]), &["n"]).is_err());
        assert!(Params::parse(&args(&["n=5..3"]), &["n"]).is_err());
        assert!(Params::parse(&args(&["n=-1"]), &["n"]).is_err());
        assert!(Params::parse(&args(&["n=1", "n=2"]), &["n"]).is_err());
    }
}
