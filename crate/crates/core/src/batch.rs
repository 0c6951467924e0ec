//! Many independent solves or DIP enumerations at once. With the `parallel`
//! feature the items are spread over the rayon pool; otherwise they run in
//! order on the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::formula::CnfFormula;
use crate::search::{solve, SolveError, SolveResult, SolverConfig};
use crate::tvd::{find_all_tvds, TvdProblem, TvdResult};

#[derive(Clone, Debug)]
pub struct BatchJob {
    pub formula: CnfFormula,
    pub config: SolverConfig,
}

fn run_job(job: &BatchJob) -> Result<SolveResult, SolveError> {
    solve(&job.formula, job.config.clone())
}

/// Solves every job; results keep the input order.
pub fn solve_batch(jobs: &[BatchJob]) -> Vec<Result<SolveResult, SolveError>> {
    #[cfg(feature = "parallel")]
    {
        jobs.par_iter().map(run_job).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        solve_batch_sequential(jobs)
    }
}

pub fn solve_batch_sequential(jobs: &[BatchJob]) -> Vec<Result<SolveResult, SolveError>> {
    jobs.iter().map(run_job).collect()
}

/// Enumerates the DIPs of every graph; results keep the input order.
pub fn tvd_batch(graphs: &[TvdProblem]) -> Vec<TvdResult> {
    #[cfg(feature = "parallel")]
    {
        graphs.par_iter().map(find_all_tvds).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        tvd_batch_sequential(graphs)
    }
}

pub fn tvd_batch_sequential(graphs: &[TvdProblem]) -> Vec<TvdResult> {
    graphs.iter().map(find_all_tvds).collect()
}
