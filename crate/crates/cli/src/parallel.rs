//! Rayon drivers. Jobs are evaluated independently and reassembled in job
//! order, so the result never depends on the number of threads.

use std::env;

use rayon::prelude::*;
use weilzeta_core::eisenstein::{assemble_series, coefficient, series_jobs};
use weilzeta_core::{DiscriminantForm, GramLattice, Rat, Result, VVQSeries, Weight};

use crate::error::CliError;

pub const THREADS_VAR: &str = "WEILZETA_THREADS";

/// A pool capped by `WEILZETA_THREADS` (rayon's default when unset).
pub fn pool() -> std::result::Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = env::var(THREADS_VAR) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::usage(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::usage(format!("cannot start thread pool: {e}")))
}

/// `eisenstein::series` with the coefficient jobs spread over the current pool.
pub fn eisenstein_series(l: &GramLattice, k: &Weight, prec: &Rat) -> Result<VVQSeries> {
    k.check_parity(l.signature())?;
    let df = DiscriminantForm::new(l)?;
    let jobs = series_jobs(&df, prec);
    let values = jobs.par_iter().map(|(i, n)| coefficient(l, k, n, df.element(*i))).collect();
    assemble_series(k, &df, prec, &jobs, values)
}

/// `c(n, γ)` for a batch of `(n, γ)`, in input order.
pub fn coefficients(l: &GramLattice, k: &Weight, jobs: &[(Rat, Vec<Rat>)]) -> Vec<Result<Rat>> {
    jobs.par_iter().map(|(n, gamma)| coefficient(l, k, n, gamma)).collect()
}
