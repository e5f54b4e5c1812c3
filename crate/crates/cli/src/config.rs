use std::path::PathBuf;

use cycloribbon::aks0::BlockId;
use cycloribbon::reptheory::DEFAULT_GUARD;
use rayon::prelude::*;

use crate::CliError;

/// Environment variable that, when set, overrides the dimension guard.
pub const GUARD_ENV: &str = "CYCLORIBBON_GUARD";

/// Output format of computed tables. JSON is always written to `--out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Latex => "tex",
        }
    }
}

/// Everything a command needs besides its positional arguments.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub r: Option<usize>,
    /// Block filter as a (possibly truncated) evaluation; missing trailing
    /// entries are zero.
    pub block: Option<Vec<usize>>,
    pub format: Format,
    /// Largest block dimension `#colors · n!` a command may build.
    pub guard: usize,
    /// Width of the block fan-out; `0` lets the thread pool decide.
    pub jobs: usize,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { n: None, r: None, block: None, format: Format::Json, guard: DEFAULT_GUARD, jobs: 0, out: None }
    }
}

/// The guard in force: the environment variable if set, else the flag,
/// else the library default.
pub fn resolve_guard(flag: Option<usize>) -> Result<usize, CliError> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::BadInput(format!("{GUARD_ENV}={v} is not a number"))),
        Err(_) => Ok(flag.unwrap_or(DEFAULT_GUARD)),
    }
}

/// Parses `e1,e2,…` (parentheses optional).
pub fn parse_block(s: &str) -> Result<Vec<usize>, CliError> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::BadInput(format!("bad block evaluation {s:?}"))))
        .collect()
}

impl RunConfig {
    /// Checks `n ≥ 1`, `r ≥ 1`, `guard ≥ 1` and that a block filter fits
    /// `n` and `r` when those are given.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.n == Some(0) {
            return Err(CliError::BadInput("--n must be at least 1".into()));
        }
        if self.r == Some(0) {
            return Err(CliError::BadInput("--r must be at least 1".into()));
        }
        if self.guard == 0 {
            return Err(CliError::BadInput("the guard must be at least 1".into()));
        }
        if let Some(b) = &self.block {
            if b.is_empty() {
                return Err(CliError::BadInput("empty block evaluation".into()));
            }
            if let Some(r) = self.r {
                if b.len() > r {
                    return Err(CliError::BadInput(format!("block {b:?} has more than r = {r} entries")));
                }
            }
            if let Some(n) = self.n {
                if b.iter().sum::<usize>() != n {
                    return Err(CliError::BadInput(format!("block {b:?} does not sum to n = {n}")));
                }
            }
        }
        Ok(())
    }

    /// `(n, r)`, both required.
    pub fn size(&self) -> Result<(usize, usize), CliError> {
        match (self.n, self.r) {
            (Some(n), Some(r)) => Ok((n, r)),
            _ => Err(CliError::BadInput("--n and --r are required".into())),
        }
    }

    /// Whether an evaluation passes the `--n`, `--r` and `--block` filters.
    pub fn selects(&self, evaluation: &[usize]) -> bool {
        let n: usize = evaluation.iter().sum();
        if self.n.is_some_and(|m| m != n) || self.r.is_some_and(|r| r != evaluation.len()) {
            return false;
        }
        match &self.block {
            None => true,
            Some(b) => {
                b.len() <= evaluation.len()
                    && evaluation.iter().enumerate().all(|(i, e)| *e == b.get(i).copied().unwrap_or(0))
            }
        }
    }

    /// The blocks of `AKS(n,r)(0)` passing the filters, in canonical order.
    pub fn blocks(&self) -> Result<Vec<BlockId>, CliError> {
        let (n, r) = self.size()?;
        let out: Vec<BlockId> = BlockId::all(n, r).into_iter().filter(|b| self.selects(&b.evaluation)).collect();
        if out.is_empty() {
            return Err(CliError::BadInput(format!("no block of AKS({n},{r}) matches the filter")));
        }
        Ok(out)
    }

    /// Maps `f` over `items` on a pool of `jobs` threads. Workers share
    /// nothing and results come back in input order, so the output does
    /// not depend on the width.
    pub fn par_map<T: Sync, U: Send>(&self, items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build().expect("thread pool");
        pool.install(|| items.par_iter().map(&f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_filter_pads_with_zeros() {
        let cfg = RunConfig { n: Some(3), r: Some(3), block: Some(vec![2, 1]), ..RunConfig::default() };
        assert!(cfg.selects(&[2, 1, 0]));
        assert!(!cfg.selects(&[2, 0, 1]));
        assert_eq!(cfg.blocks().unwrap(), vec![BlockId { evaluation: vec![2, 1, 0] }]);
    }

    #[test]
    fn validation() {
        assert!(RunConfig { n: Some(0), ..RunConfig::default() }.validate().is_err());
        assert!(RunConfig { guard: 0, ..RunConfig::default() }.validate().is_err());
        let cfg = RunConfig { n: Some(3), r: Some(2), block: Some(vec![1, 1]), ..RunConfig::default() };
        assert!(cfg.validate().is_err());
        assert_eq!(parse_block("(2,1)").unwrap(), vec![2, 1]);
        assert!(parse_block("2;1").is_err());
    }
}
