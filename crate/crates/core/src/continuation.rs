//! Real analytic continuation of the numbers (through the zeta function) and
//! of the polynomials (through the Gamma-ratio sum over the integer/fractional
//! split of `s`).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::genocchi::genocchi_number;
use crate::qcore::{binomial_f64, QContext, SeriesPolicy};
use crate::zeta::{zeta_derivative, zeta_weighted};

/// Lanczos coefficients, g = 7, matching the GSL set; ~15 significant digits.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// `ln Gamma(z)` for `z > 0`.
pub fn log_gamma(z: f64) -> Result<f64> {
    if z.is_nan() || z <= 0.0 {
        return Err(Error::Domain(format!(
            "log_gamma needs a positive argument, got {z}"
        )));
    }
    Ok(log_gamma_unchecked(z))
}

fn log_gamma_unchecked(z: f64) -> f64 {
    if z < 0.5 {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return (std::f64::consts::PI / (std::f64::consts::PI * z).sin()).ln()
            - log_gamma_unchecked(1.0 - z);
    }
    let x = z - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Integer/fractional split of a nonnegative real deformation parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitS {
    s: f64,
    int_part: u32,
    frac_part: f64,
}

impl SplitS {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() || s < 0.0 {
            return Err(Error::Domain(format!(
                "the integer/fractional split needs finite s >= 0, got {s}"
            )));
        }
        let int_part = s.floor();
        if int_part > u32::MAX as f64 {
            return Err(Error::Domain(format!("s = {s} is out of range")));
        }
        Ok(SplitS {
            s,
            int_part: int_part as u32,
            frac_part: s - int_part,
        })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn int_part(&self) -> u32 {
        self.int_part
    }

    pub fn frac_part(&self) -> f64 {
        self.frac_part
    }
}

/// The k-th weight of the re-indexed continuation sum:
/// `Gamma(s+1) / (Gamma(k + frac) Gamma(2 + floor(s) - k))` for
/// `0 <= k <= floor(s) + 1`.
///
/// When `k + frac == 0` the reciprocal-Gamma convention `1/Gamma(0) = 0`
/// makes the weight exactly zero; when `s` is an exact integer the weight is
/// the exact binomial `C(s, k-1)`.
pub fn gamma_ratio(split: &SplitS, k: usize) -> f64 {
    debug_assert!(k <= split.int_part() as usize + 1, "k out of range");
    let frac = split.frac_part();
    if frac == 0.0 {
        if k == 0 {
            return 0.0;
        }
        return binomial_f64(split.int_part() as usize, k - 1);
    }
    let a = log_gamma_unchecked(split.s() + 1.0);
    let b = log_gamma_unchecked(k as f64 + frac);
    let c = log_gamma_unchecked((2 + split.int_part() as usize - k) as f64);
    (a - b - c).exp()
}

/// Which value the inner interpolation `g(t)` takes at integer `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ContinuationMode {
    /// `g(t)` is the exact weighted q-Genocchi number at nonnegative integer
    /// `t`; the continued polynomial then reproduces the umbral expansion
    /// exactly at integer `s`.
    IntegerExact,
    /// `g(t) = t * zeta(1 - t)` everywhere; smooth in `s`, but `g(1) = -q`
    /// differs from `G_1 = 1` by `[2:q]` (the 0^0 corner of the series).
    #[default]
    ZetaInterpolated,
}

impl std::fmt::Display for ContinuationMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ContinuationMode::IntegerExact => write!(f, "integer-exact"),
            ContinuationMode::ZetaInterpolated => write!(f, "zeta-interpolated"),
        }
    }
}

/// Analytic continuation of the numbers: `G(s) = s * zeta(1 - s)`.
///
/// Reproduces `G_n` at integers `n >= 2` and at `n = 0`; at `s = 1` it takes
/// the value `-q` (the documented `[2:q]` gap against `G_1 = 1`).
pub fn continued_number(s: Complex64, ctx: &QContext, policy: &SeriesPolicy) -> Result<Complex64> {
    let z = zeta_weighted(Complex64::new(1.0, 0.0) - s, ctx, policy)?;
    Ok(s * z.value)
}

/// `d/ds [s * zeta(1-s)] = zeta(1-s) - s * zeta'(1-s)`.
pub fn continued_number_derivative(
    s: Complex64,
    ctx: &QContext,
    policy: &SeriesPolicy,
) -> Result<Complex64> {
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let z = zeta_weighted(one_minus_s, ctx, policy)?;
    let dz = zeta_derivative(one_minus_s, ctx, policy)?;
    Ok(z.value - s * dz.value)
}

/// The inner interpolation `g(t)` used by the polynomial continuation.
pub(crate) fn inner_number(
    t: f64,
    ctx: &QContext,
    mode: ContinuationMode,
    policy: &SeriesPolicy,
) -> Result<f64> {
    if mode == ContinuationMode::IntegerExact && t >= 0.0 && t.fract() == 0.0 {
        return Ok(genocchi_number(t as usize, ctx));
    }
    Ok(continued_number(Complex64::new(t, 0.0), ctx, policy)?.re)
}

/// Gamma-ratio continuation of the polynomials:
/// `G(s, w) = q^(-alpha w) sum_{k=0}^{floor(s)+1} gamma_ratio(s, k)
///            g(k - 1 + frac) q^(alpha w (k - 1 + frac)) [w]^(floor(s)+1-k)`.
pub fn continued_poly(
    s: f64,
    w: Complex64,
    ctx: &QContext,
    mode: ContinuationMode,
    policy: &SeriesPolicy,
) -> Result<Complex64> {
    let split = SplitS::new(s)?;
    let deg = split.int_part() as usize + 1;
    let frac = split.frac_part();
    let alpha_ln_q = ctx.alpha() as f64 * ctx.ln_q();
    if w.im == 0.0 {
        let br = ctx.bracket(w.re);
        let mut acc = 0.0;
        for k in 0..=deg {
            let weight = gamma_ratio(&split, k);
            if weight == 0.0 {
                continue;
            }
            let t = k as f64 - 1.0 + frac;
            let g = inner_number(t, ctx, mode, policy)?;
            acc += weight * g * (alpha_ln_q * w.re * t).exp() * br.powi((deg - k) as i32);
        }
        return Ok(Complex64::new(acc * (-alpha_ln_q * w.re).exp(), 0.0));
    }
    let br = ctx.bracket_complex(w);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=deg {
        let weight = gamma_ratio(&split, k);
        if weight == 0.0 {
            continue;
        }
        let t = k as f64 - 1.0 + frac;
        let g = inner_number(t, ctx, mode, policy)?;
        acc += (w * (alpha_ln_q * t)).exp() * br.powi((deg - k) as i32) * (weight * g);
    }
    Ok(acc * (-w * alpha_ln_q).exp())
}
