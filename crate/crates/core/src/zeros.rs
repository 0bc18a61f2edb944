//! Reduction of the continued polynomial to a genuine polynomial in
//! `u = q^(alpha w)`, complete root finding, and zero-trajectory tracing over
//! a grid of deformation parameters.
//!
//! Under the substitution the continued polynomial is exactly
//! `u^(frac - 2) R(u)` with `deg R <= floor(s) + 1`, so a simultaneous
//! root iteration in the u-plane recovers every zero; the multivalued map
//! back to `w` is exposed through an explicit branch index.

use num_complex::Complex64;

use crate::continuation::{gamma_ratio, inner_number, ContinuationMode, SplitS};
use crate::error::{Error, Result};
use crate::exec::map_collect;
use crate::qcore::{binomial_f64, QContext, SeriesPolicy};

/// The continued polynomial rewritten as `u^(frac_exp - 2) * R(u)`.
#[derive(Clone, Debug)]
pub struct UPolynomial {
    /// Ascending coefficients of `R(u)` as built; degree `floor(s) + 1`.
    coeffs: Vec<Complex64>,
    /// Index of the lowest non-negligible coefficient (= number of `u = 0`
    /// roots split off; they correspond to `w -> +infinity`).
    lo: usize,
    /// Index of the highest non-negligible coefficient.
    hi: usize,
    frac_exp: f64,
    s: f64,
    ctx: QContext,
}

/// Relative threshold below which a coefficient counts as a structural zero.
const COEFF_TRIM_EPS: f64 = 1e-13;

impl UPolynomial {
    /// Expands `R(u) = sum_k d_k u^k ((u - 1)/(q^alpha - 1))^(floor(s)+1-k)`
    /// by binomial convolution, with `d_k = gamma_ratio(s, k) g(k - 1 + frac)`.
    pub fn build(
        s: f64,
        ctx: &QContext,
        mode: ContinuationMode,
        policy: &SeriesPolicy,
    ) -> Result<Self> {
        let split = SplitS::new(s)?;
        let deg = split.int_part() as usize + 1;
        let frac = split.frac_part();
        let qa_minus_1 = ctx.q_alpha() - 1.0;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); deg + 1];
        for k in 0..=deg {
            let weight = gamma_ratio(&split, k);
            if weight == 0.0 {
                continue;
            }
            let d = weight * inner_number(k as f64 - 1.0 + frac, ctx, mode, policy)?;
            let p = deg - k;
            let scale = d / qa_minus_1.powi(p as i32);
            for j in 0..=p {
                let sign = if (p - j).is_multiple_of(2) { 1.0 } else { -1.0 };
                coeffs[k + j] += Complex64::new(sign * binomial_f64(p, j) * scale, 0.0);
            }
        }
        let max_abs = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut hi = deg;
        while hi > 0 && coeffs[hi].norm() <= COEFF_TRIM_EPS * max_abs {
            hi -= 1;
        }
        let mut lo = 0;
        while lo < hi && coeffs[lo].norm() <= COEFF_TRIM_EPS * max_abs {
            lo += 1;
        }
        Ok(UPolynomial {
            coeffs,
            lo,
            hi,
            frac_exp: frac,
            s,
            ctx: *ctx,
        })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn frac_exp(&self) -> f64 {
        self.frac_exp
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    /// All coefficients of `R(u)` as built (ascending).
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficients with structural zeros removed from both ends.
    pub fn trimmed(&self) -> &[Complex64] {
        &self.coeffs[self.lo..=self.hi]
    }

    /// Number of `u = 0` roots split off by the low-end trim.
    pub fn u_zero_roots(&self) -> usize {
        self.lo
    }

    /// Degree of the trimmed polynomial (= number of finite-`w` roots).
    pub fn degree(&self) -> usize {
        self.hi - self.lo
    }

    /// Horner evaluation of the full `R(u)`.
    pub fn eval(&self, u: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    /// `u^(frac - 2) R(u)` at `u = q^(alpha w)`; equals the continued
    /// polynomial up to roundoff (the module's defining identity).
    pub fn value_at_w(&self, w: Complex64) -> Complex64 {
        let u = (w * (self.ctx.alpha() as f64 * self.ctx.ln_q())).exp();
        u.powf(self.frac_exp - 2.0) * self.eval(u)
    }
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a polynomial (ascending coefficients, nonzero lead)
/// by simultaneous Aberth-Ehrlich iteration, each polished with one Newton
/// step. Roots are returned sorted by (re, im).
///
/// `initial` seeds the iteration when it carries exactly `degree` points;
/// otherwise guesses start on a circle of radius `1 + max|c_i| / |lead|`.
pub fn find_polynomial_roots(
    coeffs: &[Complex64],
    tol: f64,
    max_iters: usize,
    initial: Option<&[Complex64]>,
) -> Result<Vec<Complex64>> {
    assert!(!coeffs.is_empty(), "empty coefficient slice");
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[deg];
    if lead.norm() == 0.0 {
        return Err(Error::Domain("leading coefficient must be nonzero".into()));
    }
    if deg == 1 {
        return Ok(vec![-coeffs[0] / lead]);
    }
    let max_abs = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let resid_cap = tol * (1.0 + max_abs);
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
            / lead.norm();
    let mut z: Vec<Complex64> = match initial {
        Some(g) if g.len() == deg => g.to_vec(),
        _ => (0..deg)
            .map(|j| {
                // fixed angular offset breaks conjugate symmetry traps
                let theta = 2.0 * std::f64::consts::PI * j as f64 / deg as f64 + 0.41;
                Complex64::new(radius * theta.cos(), radius * theta.sin())
            })
            .collect(),
    };
    let mut converged = false;
    for _ in 0..max_iters {
        let mut next = z.clone();
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let (p, dp) = horner_with_derivative(coeffs, z[i]);
            if p.norm() <= f64::MIN_POSITIVE * 4.0 {
                continue;
            }
            let newton = if dp.norm() > 0.0 {
                p / dp
            } else {
                Complex64::new(tol, tol)
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j == i {
                    continue;
                }
                let mut d = z[i] - z[j];
                if d.norm() < 1e-100 {
                    d = Complex64::new(1e-100, 0.0);
                }
                repulsion += Complex64::new(1.0, 0.0) / d;
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let delta = if denom.norm() > 1e-100 {
                newton / denom
            } else {
                newton
            };
            next[i] = z[i] - delta;
            max_step = max_step.max(delta.norm() / (1.0 + z[i].norm()));
        }
        z = next;
        if max_step <= tol {
            converged = true;
            break;
        }
    }
    // single Newton polish
    for zi in z.iter_mut() {
        let (p, dp) = horner_with_derivative(coeffs, *zi);
        if dp.norm() > 0.0 {
            *zi -= p / dp;
        }
    }
    let residuals: Vec<f64> = z
        .iter()
        .map(|&zi| horner_with_derivative(coeffs, zi).0.norm())
        .collect();
    let worst = residuals.iter().copied().fold(0.0, f64::max);
    if !converged && worst > resid_cap {
        return Err(Error::RootsNotConverged {
            iters: max_iters,
            worst_residual: worst,
            best: z,
            residuals,
        });
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(z)
}

/// Roots of the trimmed `R(u)` (the `u = 0` roots are excluded; they map to
/// `w -> infinity` and are reported through [`UPolynomial::u_zero_roots`]).
pub fn find_roots(p: &UPolynomial, tol: f64, max_iters: usize) -> Result<Vec<Complex64>> {
    find_polynomial_roots(p.trimmed(), tol, max_iters, None)
}

pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
pub const DEFAULT_ROOT_ITERS: usize = 200;

/// Inverts `u = q^(alpha w)`:
/// `w = (Log u + 2 pi i branch) / (alpha ln q)`, principal logarithm.
pub fn map_to_w(u: Complex64, ctx: &QContext, branch: i32) -> Result<Complex64> {
    if u.norm() == 0.0 {
        return Err(Error::Domain("u = 0 has no finite preimage w".into()));
    }
    let log = u.ln() + Complex64::new(0.0, 2.0 * std::f64::consts::PI * branch as f64);
    Ok(log / (ctx.alpha() as f64 * ctx.ln_q()))
}

/// One zero of the continued polynomial at a fixed `s`.
#[derive(Clone, Copy, Debug)]
pub struct RootRecord {
    pub u: Complex64,
    pub w: Complex64,
    /// Round-trip residual `|G(s, w)|` evaluated through the continuation sum.
    pub residual: f64,
}

/// Complete root set at one grid value of `s`.
pub fn solve_grid_point(
    s: f64,
    ctx: &QContext,
    mode: ContinuationMode,
    branch: i32,
    policy: &SeriesPolicy,
) -> Result<Vec<RootRecord>> {
    let poly = UPolynomial::build(s, ctx, mode, policy)?;
    let roots = find_roots(&poly, DEFAULT_ROOT_TOL, DEFAULT_ROOT_ITERS)?;
    let mut records = Vec::with_capacity(roots.len());
    for u in roots {
        let w = map_to_w(u, ctx, branch)?;
        let residual = crate::continuation::continued_poly(s, w, ctx, mode, policy)?.norm();
        records.push(RootRecord { u, w, residual });
    }
    records.sort_by(|a, b| {
        a.w.re
            .total_cmp(&b.w.re)
            .then(a.w.im.total_cmp(&b.w.im))
    });
    Ok(records)
}

/// A matched chain of root indices across consecutive grid steps; may begin
/// or end mid-grid (births and deaths are first-class events).
#[derive(Clone, Debug, Default)]
pub struct Path {
    /// `(s index, root index)` pairs in ascending s order.
    pub points: Vec<(usize, usize)>,
}

/// Per-s root sets over an ascending s-grid with cross-step matching.
#[derive(Clone, Debug)]
pub struct ZeroTrajectory {
    pub s_grid: Vec<f64>,
    pub roots_per_s: Vec<Vec<RootRecord>>,
    pub paths: Vec<Path>,
    /// `path_ids[i][j]` is the path containing root `j` at grid index `i`.
    pub path_ids: Vec<Vec<usize>>,
    /// Grid points whose numeric solve failed, with the failure text; their
    /// root sets are empty but the sweep continues.
    pub failures: Vec<(usize, String)>,
}

/// Matching cutoff in w-plane distance, in units of the grid spacing.
/// Steps larger than this open/close paths instead of being chained, so a
/// root escaping to infinity near an integer `s` is recorded as a death.
const MATCH_CUTOFF_PER_STEP: f64 = 15.0;

/// Traces all zero trajectories over a uniform grid of `steps` intervals on
/// `[s_from, s_to]`. Per-s root solves are independent (and run in parallel
/// when the `parallel` feature is on); the matching pass is a sequential fold
/// in ascending `s`, greedy by smallest w-plane displacement.
pub fn trace_zeros(
    s_from: f64,
    s_to: f64,
    steps: usize,
    ctx: &QContext,
    mode: ContinuationMode,
    branch: i32,
    policy: &SeriesPolicy,
) -> Result<ZeroTrajectory> {
    if !(s_from.is_finite() && s_to.is_finite()) || s_from < 0.0 || s_from >= s_to {
        return Err(Error::Domain(format!(
            "need 0 <= s_from < s_to, got [{s_from}, {s_to}]"
        )));
    }
    if steps < 2 {
        return Err(Error::Domain(format!("need steps >= 2, got {steps}")));
    }
    let span = s_to - s_from;
    let s_grid: Vec<f64> = (0..=steps)
        .map(|i| {
            if i == steps {
                s_to
            } else {
                s_from + span * (i as f64 / steps as f64)
            }
        })
        .collect();
    let solved = map_collect(&s_grid, |&s| solve_grid_point(s, ctx, mode, branch, policy));
    let mut roots_per_s = Vec::with_capacity(solved.len());
    let mut failures = Vec::new();
    for (i, r) in solved.into_iter().enumerate() {
        match r {
            Ok(records) => roots_per_s.push(records),
            Err(e) => {
                failures.push((i, e.to_string()));
                roots_per_s.push(Vec::new());
            }
        }
    }

    let cutoff = MATCH_CUTOFF_PER_STEP * span / steps as f64;
    let mut paths: Vec<Path> = Vec::new();
    let mut path_ids: Vec<Vec<usize>> = Vec::with_capacity(roots_per_s.len());
    // live[j] = path id of root j at the previous grid index
    let mut live: Vec<usize> = Vec::new();
    for (i, records) in roots_per_s.iter().enumerate() {
        let mut ids = vec![usize::MAX; records.len()];
        if i > 0 && !live.is_empty() && !records.is_empty() {
            let prev = &roots_per_s[i - 1];
            let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
            for (a, pa) in prev.iter().enumerate() {
                for (b, pb) in records.iter().enumerate() {
                    let d = (pb.w - pa.w).norm();
                    if d <= cutoff {
                        pairs.push((d, a, b));
                    }
                }
            }
            pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
            let mut prev_used = vec![false; prev.len()];
            for (_, a, b) in pairs {
                if prev_used[a] || ids[b] != usize::MAX {
                    continue;
                }
                prev_used[a] = true;
                let pid = live[a];
                ids[b] = pid;
                paths[pid].points.push((i, b));
            }
        }
        for (b, id) in ids.iter_mut().enumerate() {
            if *id == usize::MAX {
                let pid = paths.len();
                paths.push(Path {
                    points: vec![(i, b)],
                });
                *id = pid;
            }
        }
        live = ids.clone();
        path_ids.push(ids);
    }

    Ok(ZeroTrajectory {
        s_grid,
        roots_per_s,
        paths,
        path_ids,
        failures,
    })
}

impl ZeroTrajectory {
    /// w-plane displacements of all matched consecutive path steps.
    pub fn matched_displacements(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for path in &self.paths {
            for pair in path.points.windows(2) {
                let (i0, j0) = pair[0];
                let (i1, j1) = pair[1];
                if i1 == i0 + 1 {
                    let a = self.roots_per_s[i0][j0].w;
                    let b = self.roots_per_s[i1][j1].w;
                    out.push((b - a).norm());
                }
            }
        }
        out
    }

    /// Root records at an exact grid value of `s`, if that value is on the grid.
    pub fn roots_at(&self, s: f64) -> Option<&[RootRecord]> {
        self.s_grid
            .iter()
            .position(|&g| g == s)
            .map(|i| self.roots_per_s[i].as_slice())
    }
}
