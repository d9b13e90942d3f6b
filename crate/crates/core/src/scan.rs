//! Parallel classification of parameter grids.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criteria::{classify_with_scope, CertificateScope, Verdict};
use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub m: f64,
    pub alpha: f64,
    pub verdict: Verdict,
    pub vertical_margin: f64,
    pub min_lattice_norm: f64,
    pub shimizu_deficit: f64,
}

/// `n` evenly spaced values from `lo` to `hi` inclusive (just `lo` when `n == 1`).
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Cartesian product in `(m, alpha)` order: `m` varies slowest.
pub fn grid(ms: &[f64], alphas: &[f64]) -> Vec<(f64, f64)> {
    ms.iter().flat_map(|&m| alphas.iter().map(move |&a| (m, a))).collect()
}

/// Classifies every point on a pool of `jobs` workers (0 = rayon default).
/// Rows come back in input order.
pub fn scan_points(
    points: &[(f64, f64)],
    scope: CertificateScope,
    jobs: usize,
    tol: &Tolerance,
) -> Result<Vec<ScanRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParameter(format!("thread pool: {e}")))?;
    pool.install(|| {
        points
            .par_iter()
            .map(|&(m, alpha)| {
                let c = classify_with_scope(m, alpha, scope, tol)?;
                Ok(ScanRow {
                    m,
                    alpha,
                    verdict: c.verdict,
                    vertical_margin: c.diagnostics.vertical_margin,
                    min_lattice_norm: c.diagnostics.min_lattice_norm,
                    shimizu_deficit: c.diagnostics.shimizu_deficit,
                })
            })
            .collect()
    })
}
