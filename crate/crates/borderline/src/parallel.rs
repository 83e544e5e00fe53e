//! Thread-pool wrappers around the enumeration and the `Ext¹` filter.
//!
//! Results are identical for every thread count: branches are expanded in
//! order and the final list is sorted by the reduced Gröbner basis.

use rayon::prelude::*;

use borderline_core::border::enumerate::{expand, finish, Branch};
use borderline_core::border::slip::{ext_verdict, ExtVerdict};
use borderline_core::border::EnumerationConfig;
use borderline_core::{Error, Ideal};

use crate::error::{CliError, Result};

/// `BORDERLINE_THREADS`, defaulting to the available parallelism.
pub fn threads() -> usize {
    std::env::var("BORDERLINE_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn pool(n: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| CliError::Usage(format!("thread pool: {}", e)))
}

pub fn enumerate(cfg: &EnumerationConfig, n: usize) -> Result<Vec<Ideal>> {
    if n <= 1 {
        return Ok(borderline_core::border::enumerate_monomial_apolar_ideals(cfg)?);
    }
    pool(n)?.install(|| {
        let mut level = vec![Branch::root(cfg)];
        for i in 0..=cfg.cap {
            level = level.par_iter().flat_map_iter(|b| expand(cfg, b, i)).collect();
            if level.len() > cfg.branch_limit {
                return Err(Error::BranchLimit(cfg.branch_limit).into());
            }
        }
        Ok(finish(cfg, level))
    })
}

pub fn ext_filter(candidates: &[Ideal], n: usize) -> Result<Vec<ExtVerdict>> {
    let run = || candidates.par_iter().map(ext_verdict).collect::<std::result::Result<Vec<_>, _>>();
    Ok(pool(n.max(1))?.install(run)?)
}
