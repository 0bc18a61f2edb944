//! Error type shared by every module.

use num_complex::Complex64;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Input outside a documented precondition (bad `q`, `alpha`, shift, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A certified series hit the term cap before its tail bound was met.
    #[error("series did not converge within {max_terms} terms (tail bound {tail_bound:.3e}, partial {partial:.6e})")]
    NonConvergence {
        max_terms: usize,
        tail_bound: f64,
        partial: f64,
    },

    /// A table was asked for an index it does not cover.
    #[error("Genocchi table covers n = 0..={max_n}, index {needed} requested")]
    TableTooShort { needed: usize, max_n: usize },

    /// The simultaneous root iteration stalled; best iterates are attached.
    #[error("root finder did not converge after {iters} iterations (worst residual {worst_residual:.3e})")]
    RootsNotConverged {
        iters: usize,
        worst_residual: f64,
        best: Vec<Complex64>,
        residuals: Vec<f64>,
    },

    /// A cross-route consistency assertion failed.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
