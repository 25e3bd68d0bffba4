//! Multi-threaded exhaustive weight enumeration.
//!
//! The message space is split by fixing the top coefficients; each part runs
//! its own Gray-code walk and the per-part counts are summed, so the result is
//! the same for every worker count.

use hermdes_core::linalg::{weight_enumerator_part, EnumError};
use hermdes_core::{FpVector, GenMatrixCode, WeightEnumerator};
use rayon::prelude::*;

/// Environment variable read for the default worker count.
pub const WORKERS_ENV: &str = "HERMDES_WORKERS";

pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Exhaustive enumerator over `workers` threads.
pub fn weight_enumerator_parallel<V: FpVector + Send + Sync>(
    code: &GenMatrixCode<V>,
    budget: usize,
    workers: usize,
) -> Result<WeightEnumerator, EnumError> {
    let k = code.dimension();
    if k > budget {
        return Err(EnumError::DimensionOverBudget { dimension: k, budget });
    }
    let p = code.modulus() as u64;
    // a few parts per worker keeps threads busy without tiny tasks
    let mut fixed = 0;
    while fixed < k && p.pow(fixed as u32) < 4 * workers.max(1) as u64 {
        fixed += 1;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let counts = pool.install(|| {
        (0..p.pow(fixed as u32))
            .into_par_iter()
            .map(|part| weight_enumerator_part(code, fixed, part))
            .reduce(
                || vec![0u64; code.len() + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    });
    Ok(WeightEnumerator::from_counts(&counts))
}
