//! Weighted q-Genocchi numbers and polynomials, their q-Zeta interpolation,
//! the Gamma-ratio real analytic continuation, and the dynamics of the
//! continued polynomials' zeros.
//!
//! Layout follows the computation pipeline:
//! * [`qcore`] — parameter validation, q-bracket arithmetic, certified
//!   alternating-series summation;
//! * [`genocchi`] — the number/polynomial family via three independent
//!   routes plus identity verifiers and the classical oracle;
//! * [`zeta`] — the weighted Genocchi-Zeta and Hurwitz-Zeta functions and
//!   their s-derivative;
//! * [`continuation`] — log-Gamma, the integer/fractional split, and the
//!   continued number/polynomial;
//! * [`zeros`] — u-plane reduction, simultaneous root finding, trajectory
//!   tracing;
//! * [`exec`] — the data-parallel grid helpers (sequential fallback behind
//!   the `parallel` feature).

mod dd;
pub mod continuation;
pub mod error;
pub mod exec;
pub mod genocchi;
pub mod qcore;
pub mod zeros;
pub mod zeta;

pub use continuation::{
    continued_number, continued_number_derivative, continued_poly, gamma_ratio, log_gamma,
    ContinuationMode, SplitS,
};
pub use error::{Error, Result};
pub use genocchi::{
    accuracy_warning, classical_genocchi, genocchi_number, genocchi_poly, genocchi_poly_closed,
    genocchi_poly_series, verify_boundary_identity, verify_combined_identity, GenocchiTable,
    IdentityForm, IdentityReport,
};
pub use num_complex::Complex64;
pub use qcore::{sum_alternating_q_series, QContext, SeriesPolicy, SeriesResult};
pub use zeros::{
    find_polynomial_roots, find_roots, map_to_w, solve_grid_point, trace_zeros, Path, RootRecord,
    UPolynomial, ZeroTrajectory,
};
pub use zeta::{hurwitz_weighted, zeta_at_negative_integer, zeta_derivative, zeta_weighted};
