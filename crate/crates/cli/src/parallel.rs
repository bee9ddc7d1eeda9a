//! Sweeps fanned out over a rayon pool.

use cyclo_core::sweep::{range_text, tasks, Claim, SweepBounds, Verifier};
use cyclo_core::VerificationReport;
use rayon::prelude::*;

use crate::CliError;

/// Runs every point of `claim` on `jobs` threads. Point reports are
/// collected in task order and merged, so the result does not depend on
/// `jobs`.
pub fn sweep(verifier: &Verifier, claim: Claim, bounds: &SweepBounds, jobs: usize) -> Result<VerificationReport, CliError> {
    let points = tasks(claim, bounds)?;
    let reports: Vec<VerificationReport> = if jobs <= 1 {
        points.iter().map(|t| verifier.run(t)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {jobs} worker threads: {e}")))?;
        pool.install(|| points.par_iter().map(|t| verifier.run(t)).collect())
    };
    Ok(VerificationReport::merge(claim.id(), range_text(claim, bounds), reports))
}
