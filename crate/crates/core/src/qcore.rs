//! Parameter validation, q-bracket arithmetic, and certified alternating-series
//! summation shared by every other module.
//!
//! All series here are of the shape `sum_m (-1)^m q^m f(m)` with `|f(m)|`
//! bounded by a caller-supplied constant, so the omitted tail is bounded by a
//! geometric series and every result carries a certificate.

use num_complex::Complex64;

use crate::dd::{Dd, DD_ZERO};
use crate::error::{Error, Result};

/// Validated parameter pack `(q, alpha)` with cached derived constants.
///
/// `q` is restricted to the open interval (0, 1) and `alpha` to integers >= 1;
/// `[x : q^alpha]` is then real, positive and monotone for real `x >= 0`, and
/// complex powers can use the real logarithm with no branch ambiguity.
/// `alpha = 0` is rejected: `[x : q^0]` is the indeterminate 0/0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QContext {
    q: f64,
    alpha: u32,
    ln_q: f64,
    q_alpha: f64,
}

impl QContext {
    pub fn new(q: f64, alpha: u32) -> Result<Self> {
        if !q.is_finite() || q <= 0.0 || q >= 1.0 {
            return Err(Error::Domain(format!(
                "q must lie strictly inside (0, 1), got {q}"
            )));
        }
        if alpha < 1 {
            return Err(Error::Domain(
                "alpha must be an integer >= 1 (alpha = 0 makes [x:q^alpha] indeterminate)".into(),
            ));
        }
        let ln_q = q.ln();
        Ok(QContext {
            q,
            alpha,
            ln_q,
            q_alpha: (alpha as f64 * ln_q).exp(),
        })
    }

    #[inline]
    pub fn q(&self) -> f64 {
        self.q
    }

    #[inline]
    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    #[inline]
    pub fn ln_q(&self) -> f64 {
        self.ln_q
    }

    /// Cached `q^alpha`, in (0, 1).
    #[inline]
    pub fn q_alpha(&self) -> f64 {
        self.q_alpha
    }

    /// `[2 : q] = 1 + q`, the prefactor of every generating-function sum.
    #[inline]
    pub fn two_bracket(&self) -> f64 {
        1.0 + self.q
    }

    /// `[x : q^alpha] = (1 - q^(alpha x)) / (1 - q^alpha)` for real `x`.
    ///
    /// The `(1 - ...)` form keeps the denominator positive and makes
    /// `bracket(0) == +0.0` and `bracket(1) == 1.0` exact.
    #[inline]
    pub fn bracket(&self, x: f64) -> f64 {
        (1.0 - (self.alpha as f64 * x * self.ln_q).exp()) / (1.0 - self.q_alpha)
    }

    /// Complex-argument q-bracket; real axis input reduces exactly to
    /// [`Self::bracket`] with a zero imaginary part.
    #[inline]
    pub fn bracket_complex(&self, x: Complex64) -> Complex64 {
        if x.im == 0.0 {
            return Complex64::new(self.bracket(x.re), 0.0);
        }
        let e = (x * (self.alpha as f64 * self.ln_q)).exp();
        (Complex64::new(1.0, 0.0) - e) / (1.0 - self.q_alpha)
    }

    /// Supremum of `[m + x : q^alpha]` over integer `m >= 0`, `1/(1 - q^alpha)`.
    #[inline]
    pub fn bracket_sup(&self) -> f64 {
        1.0 / (1.0 - self.q_alpha)
    }

    /// `q^alpha` to double-double precision (exact integer power of `q`).
    #[inline]
    pub(crate) fn q_alpha_dd(&self) -> Dd {
        Dd::from_f64(self.q).powi(self.alpha as i32)
    }
}

/// Truncation contract for certified series evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesPolicy {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy {
            rel_tol: 1e-12,
            max_terms: 1_000_000,
        }
    }
}

impl SeriesPolicy {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if rel_tol.is_nan() || rel_tol <= 0.0 || max_terms < 1 {
            return Err(Error::Domain(format!(
                "series policy needs rel_tol > 0 and max_terms >= 1, got ({rel_tol}, {max_terms})"
            )));
        }
        Ok(SeriesPolicy { rel_tol, max_terms })
    }
}

/// A certified series value: the sum, how many terms were taken, and an upper
/// bound on the modulus of the omitted tail.
#[derive(Clone, Copy, Debug)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

/// Sums `sum_{m >= m0} term_fn(m)` under the caller's certificate
/// `|term_fn(m)| <= bound_const * q^m`.
///
/// Truncates once the geometric tail `bound_const * q^m / (1 - q)` drops below
/// `rel_tol * max(1, |partial|)`; the reported tail bound is that quantity.
/// Kahan-compensated accumulation keeps the summation error at the ulp level
/// even when terms partially cancel.
pub fn sum_alternating_q_series<F>(
    mut term_fn: F,
    m0: u64,
    bound_const: f64,
    ctx: &QContext,
    policy: &SeriesPolicy,
) -> Result<SeriesResult>
where
    F: FnMut(u64) -> Complex64,
{
    if !bound_const.is_finite() || bound_const < 0.0 {
        return Err(Error::Domain(format!(
            "series bound constant must be finite and nonnegative, got {bound_const}"
        )));
    }
    let q = ctx.q();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    // envelope = bound_const * q^m / (1 - q), maintained multiplicatively
    let mut envelope = bound_const * q.powi(m0 as i32) / (1.0 - q);
    let mut m = m0;
    loop {
        if envelope <= policy.rel_tol * sum.norm().max(1.0) {
            return Ok(SeriesResult {
                value: sum,
                terms_used: (m - m0) as usize,
                tail_bound: envelope,
            });
        }
        if (m - m0) as usize >= policy.max_terms {
            return Err(Error::NonConvergence {
                max_terms: policy.max_terms,
                tail_bound: envelope,
                partial: sum.norm(),
            });
        }
        // Kahan step
        let y = term_fn(m) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        envelope *= q;
        m += 1;
    }
}

/// Double-double variant of the certified sum, for the routes whose terms are
/// built purely from integer powers of exactly-representable bases.
pub(crate) fn sum_alternating_dd<F>(
    mut term_fn: F,
    m0: u64,
    bound_const: f64,
    q: f64,
    policy: &SeriesPolicy,
) -> Result<(Dd, usize, f64)>
where
    F: FnMut(u64) -> Dd,
{
    if !bound_const.is_finite() || bound_const < 0.0 {
        return Err(Error::Domain(format!(
            "series bound constant must be finite and nonnegative, got {bound_const}"
        )));
    }
    let mut sum = DD_ZERO;
    let mut envelope = bound_const * q.powi(m0 as i32) / (1.0 - q);
    let mut m = m0;
    loop {
        if envelope <= policy.rel_tol * sum.abs().max(1.0) {
            return Ok((sum, (m - m0) as usize, envelope));
        }
        if (m - m0) as usize >= policy.max_terms {
            return Err(Error::NonConvergence {
                max_terms: policy.max_terms,
                tail_bound: envelope,
                partial: sum.abs(),
            });
        }
        sum = sum.add(term_fn(m));
        envelope *= q;
        m += 1;
    }
}

/// Row `n` of Pascal's triangle, exact in double-double (valid through n = 128).
pub(crate) fn binomial_row_dd(n: usize) -> Vec<Dd> {
    assert!(n <= 128, "binomial row {n} exceeds exact u128 range");
    let mut row = Vec::with_capacity(n + 1);
    let mut c: u128 = 1;
    for l in 0..=n {
        row.push(Dd::from_u128(c));
        if l < n {
            c = c * (n - l) as u128 / (l + 1) as u128;
        }
    }
    row
}

/// `C(n, k)` as f64, exact for n <= 128 via u128 arithmetic.
pub(crate) fn binomial_f64(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    c as f64
}
