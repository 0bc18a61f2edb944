//! Command-line front end for the weighted q-Genocchi toolkit.
//!
//! Exit codes: 0 success, 1 usage/domain error, 2 numeric failure
//! (non-convergence), 3 verification failure (identity residual above
//! threshold).

mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use output::{Cell, Table};
use qgenz_core as core;
use qgenz_core::{Complex64, ContinuationMode, IdentityForm, QContext, SeriesPolicy};

#[derive(Parser)]
#[command(
    name = "qgenz",
    version,
    about = "Weighted q-Genocchi numbers, polynomials, zeta interpolation, analytic continuation, and zero trajectories",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    IntegerExact,
    ZetaInterpolated,
}

impl From<ModeArg> for ContinuationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::IntegerExact => ContinuationMode::IntegerExact,
            ModeArg::ZetaInterpolated => ContinuationMode::ZetaInterpolated,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Corrected,
    PaperPrinted,
}

impl From<FormArg> for IdentityForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Corrected => IdentityForm::Corrected,
            FormArg::PaperPrinted => IdentityForm::PaperPrinted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Boundary,
    Combined,
    Relation,
    Coherence,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Umbral,
    Closed,
    Series,
}

/// Options shared by every subcommand.
#[derive(Args)]
struct Common {
    /// Deformation parameter, strictly inside (0, 1)
    #[arg(long, allow_negative_numbers = true)]
    q: f64,
    /// Integer weight, >= 1
    #[arg(long)]
    alpha: u32,
    /// Relative series tolerance
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Series term cap
    #[arg(long, default_value_t = 1_000_000)]
    max_terms: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Table of weighted q-Genocchi numbers G_0 ..= G_n_max
    Numbers {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n_max: usize,
    },
    /// One weighted q-Genocchi polynomial value G_n(x)
    Poly {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        x_imag: f64,
        /// Which of the three routes evaluates the polynomial
        #[arg(long, value_enum, default_value_t = RouteArg::Umbral)]
        route: RouteArg,
    },
    /// Weighted zeta (or Hurwitz-zeta with --x, or the s-derivative)
    Zeta {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        s_imag: f64,
        /// Hurwitz shift (> 0); switches to the Hurwitz variant
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        /// Evaluate the termwise s-derivative instead
        #[arg(long)]
        derivative: bool,
    },
    /// Analytic continuation: number G(s), or polynomial G(s, w) with --w
    Continue {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        s_imag: f64,
        #[arg(long, allow_negative_numbers = true)]
        w: Option<f64>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        w_imag: f64,
        #[arg(long, value_enum, default_value_t = ModeArg::ZetaInterpolated)]
        mode: ModeArg,
        /// d/ds of the continued number (number form only)
        #[arg(long)]
        derivative: bool,
    },
    /// Zero trajectories of the continued polynomial over an s-grid
    Zeros {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        s_from: f64,
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        s_to: f64,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::ZetaInterpolated)]
        mode: ModeArg,
        /// Branch of the w-plane logarithm
        #[arg(long, default_value_t = 0)]
        branch: i32,
    },
    /// Identity/coherence suites; exit 3 when any residual exceeds the threshold
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        k_max: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = FormArg::Corrected)]
        form: FormArg,
        /// Residual threshold for pass/fail (defaults to the per-suite gate)
        #[arg(long)]
        threshold: Option<f64>,
    },
}

enum CliError {
    Usage(String),
    Numeric(String),
    Verification(String),
}

impl From<core::Error> for CliError {
    fn from(e: core::Error) -> Self {
        match e {
            core::Error::Domain(_) | core::Error::TableTooShort { .. } => {
                CliError::Usage(e.to_string())
            }
            core::Error::NonConvergence { .. } | core::Error::RootsNotConverged { .. } => {
                CliError::Numeric(e.to_string())
            }
            core::Error::Verification(_) => CliError::Verification(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Numeric(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    core::exec::configure_threads_from_env();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("numeric failure: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn context_and_policy(common: &Common) -> Result<(QContext, SeriesPolicy), CliError> {
    let ctx = QContext::new(common.q, common.alpha)?;
    let policy = SeriesPolicy::new(common.tol, common.max_terms)?;
    Ok((ctx, policy))
}

fn base_meta(command: &str, common: &Common) -> Map<String, Value> {
    let mut meta = Map::new();
    meta.insert("command".into(), json!(command));
    meta.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    meta.insert("q".into(), json!(common.q));
    meta.insert("alpha".into(), json!(common.alpha));
    meta.insert("tol".into(), json!(common.tol));
    meta.insert("max_terms".into(), json!(common.max_terms));
    meta
}

fn emit(
    common: &Common,
    table: &Table,
    meta: Map<String, Value>,
    extra: Option<(&str, Value)>,
) -> Result<(), CliError> {
    let mut sink: Box<dyn Write> = match &common.out {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    };
    match common.format {
        FormatArg::Csv => table.write_csv(&mut sink)?,
        FormatArg::Json => table.write_json(&mut sink, meta, extra)?,
    }
    Ok(())
}

const CANCELLATION_WARNING: &str =
    "warning: binomial cancellation degrades accuracy guarantees for n > 30 or q > 0.95";

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Numbers { common, n_max } => {
            let (ctx, _) = context_and_policy(&common)?;
            let warn = core::accuracy_warning(n_max, &ctx);
            if warn {
                eprintln!("{CANCELLATION_WARNING}");
            }
            let table_vals = core::GenocchiTable::build(&ctx, n_max);
            let mut table = Table::new(vec!["n", "value"]);
            for (n, v) in table_vals.values().iter().enumerate() {
                table.push(vec![Cell::UInt(n as u64), Cell::Float(*v)]);
            }
            let mut meta = base_meta("numbers", &common);
            meta.insert("n_max".into(), json!(n_max));
            meta.insert("accuracy_warning".into(), json!(warn));
            emit(&common, &table, meta, None)
        }
        Command::Poly {
            common,
            n,
            x,
            x_imag,
            route,
        } => {
            let (ctx, policy) = context_and_policy(&common)?;
            let xc = Complex64::new(x, x_imag);
            let value = match route {
                RouteArg::Umbral => {
                    let tab = core::GenocchiTable::build(&ctx, n);
                    core::genocchi_poly(n, xc, &ctx, &tab)?
                }
                RouteArg::Closed => core::genocchi_poly_closed(n, xc, &ctx),
                RouteArg::Series => core::genocchi_poly_series(n, xc, &ctx, &policy)?.value,
            };
            if core::accuracy_warning(n, &ctx) {
                eprintln!("{CANCELLATION_WARNING}");
            }
            let mut table = Table::new(vec!["n", "re_x", "im_x", "re_val", "im_val"]);
            table.push(vec![
                Cell::UInt(n as u64),
                Cell::Float(x),
                Cell::Float(x_imag),
                Cell::Float(value.re),
                Cell::Float(value.im),
            ]);
            let mut meta = base_meta("poly", &common);
            meta.insert("n".into(), json!(n));
            meta.insert("x".into(), json!(x));
            meta.insert("x_imag".into(), json!(x_imag));
            meta.insert(
                "route".into(),
                json!(match route {
                    RouteArg::Umbral => "umbral",
                    RouteArg::Closed => "closed",
                    RouteArg::Series => "series",
                }),
            );
            emit(&common, &table, meta, None)
        }
        Command::Zeta {
            common,
            s,
            s_imag,
            x,
            derivative,
        } => {
            let (ctx, policy) = context_and_policy(&common)?;
            if derivative && x.is_some() {
                return Err(CliError::Usage(
                    "--derivative applies to the plain zeta only".into(),
                ));
            }
            let sc = Complex64::new(s, s_imag);
            let result = match (x, derivative) {
                (Some(shift), false) => core::hurwitz_weighted(sc, shift, &ctx, &policy)?,
                (None, true) => core::zeta_derivative(sc, &ctx, &policy)?,
                _ => core::zeta_weighted(sc, &ctx, &policy)?,
            };
            let mut table = Table::new(vec![
                "re_s",
                "im_s",
                "re_val",
                "im_val",
                "terms_used",
                "tail_bound",
            ]);
            table.push(vec![
                Cell::Float(s),
                Cell::Float(s_imag),
                Cell::Float(result.value.re),
                Cell::Float(result.value.im),
                Cell::UInt(result.terms_used as u64),
                Cell::Float(result.tail_bound),
            ]);
            let mut meta = base_meta("zeta", &common);
            meta.insert("s".into(), json!(s));
            meta.insert("s_imag".into(), json!(s_imag));
            if let Some(shift) = x {
                meta.insert("x".into(), json!(shift));
            }
            meta.insert("derivative".into(), json!(derivative));
            emit(&common, &table, meta, None)
        }
        Command::Continue {
            common,
            s,
            s_imag,
            w,
            w_imag,
            mode,
            derivative,
        } => {
            let (ctx, policy) = context_and_policy(&common)?;
            let mode: ContinuationMode = mode.into();
            let mut meta = base_meta("continue", &common);
            meta.insert("s".into(), json!(s));
            meta.insert("mode".into(), json!(mode.to_string()));
            meta.insert("derivative".into(), json!(derivative));
            if let Some(w_re) = w {
                if derivative {
                    return Err(CliError::Usage(
                        "--derivative is defined for the continued number, not the polynomial"
                            .into(),
                    ));
                }
                if s_imag != 0.0 {
                    return Err(CliError::Usage(
                        "the polynomial continuation needs real s >= 0".into(),
                    ));
                }
                let wc = Complex64::new(w_re, w_imag);
                let value = core::continued_poly(s, wc, &ctx, mode, &policy)?;
                let mut table = Table::new(vec!["s", "re_w", "im_w", "re_val", "im_val"]);
                table.push(vec![
                    Cell::Float(s),
                    Cell::Float(w_re),
                    Cell::Float(w_imag),
                    Cell::Float(value.re),
                    Cell::Float(value.im),
                ]);
                meta.insert("w".into(), json!(w_re));
                meta.insert("w_imag".into(), json!(w_imag));
                emit(&common, &table, meta, None)
            } else {
                let sc = Complex64::new(s, s_imag);
                let value = if derivative {
                    core::continued_number_derivative(sc, &ctx, &policy)?
                } else {
                    core::continued_number(sc, &ctx, &policy)?
                };
                let mut table = Table::new(vec!["re_s", "im_s", "re_val", "im_val"]);
                table.push(vec![
                    Cell::Float(s),
                    Cell::Float(s_imag),
                    Cell::Float(value.re),
                    Cell::Float(value.im),
                ]);
                meta.insert("s_imag".into(), json!(s_imag));
                emit(&common, &table, meta, None)
            }
        }
        Command::Zeros {
            common,
            s_from,
            s_to,
            steps,
            mode,
            branch,
        } => {
            let (ctx, policy) = context_and_policy(&common)?;
            let mode: ContinuationMode = mode.into();
            let sweep = core::trace_zeros(s_from, s_to, steps, &ctx, mode, branch, &policy)?;
            let mut table = Table::new(vec![
                "s",
                "path_id",
                "root_index",
                "re_w",
                "im_w",
                "re_u",
                "im_u",
                "residual",
            ]);
            for (i, records) in sweep.roots_per_s.iter().enumerate() {
                for (j, r) in records.iter().enumerate() {
                    table.push(vec![
                        Cell::Float(sweep.s_grid[i]),
                        Cell::UInt(sweep.path_ids[i][j] as u64),
                        Cell::UInt(j as u64),
                        Cell::Float(r.w.re),
                        Cell::Float(r.w.im),
                        Cell::Float(r.u.re),
                        Cell::Float(r.u.im),
                        Cell::Float(r.residual),
                    ]);
                }
            }
            let mut meta = base_meta("zeros", &common);
            meta.insert("s_from".into(), json!(s_from));
            meta.insert("s_to".into(), json!(s_to));
            meta.insert("steps".into(), json!(steps));
            meta.insert("mode".into(), json!(mode.to_string()));
            meta.insert("branch".into(), json!(branch));
            let failures: Vec<Value> = sweep
                .failures
                .iter()
                .map(|(i, msg)| json!({"grid_index": i, "error": msg}))
                .collect();
            for (i, msg) in &sweep.failures {
                eprintln!("grid point {i} (s = {}) failed: {msg}", sweep.s_grid[*i]);
            }
            emit(
                &common,
                &table,
                meta,
                Some(("failures", Value::Array(failures))),
            )
        }
        Command::Verify {
            common,
            suite,
            k_max,
            n_max,
            form,
            threshold,
        } => {
            let (ctx, policy) = context_and_policy(&common)?;
            let form: IdentityForm = form.into();
            let mut table = Table::new(vec![
                "suite", "form", "k", "n", "lhs", "rhs", "residual", "pass",
            ]);
            let mut all_pass = true;
            let run_boundary = matches!(suite, SuiteArg::Boundary | SuiteArg::All);
            let run_combined = matches!(suite, SuiteArg::Combined | SuiteArg::All);
            let run_relation = matches!(suite, SuiteArg::Relation | SuiteArg::All);
            let run_coherence = matches!(suite, SuiteArg::Coherence | SuiteArg::All);

            if run_boundary || run_combined {
                let gate = threshold.unwrap_or(1e-9);
                let needed = (n_max + 1).max(k_max);
                let num_table = core::GenocchiTable::build(&ctx, needed);
                for k in 1..=k_max {
                    for n in 0..=n_max {
                        if run_boundary {
                            let r = core::verify_boundary_identity(k, n, &ctx, form)?;
                            let pass = r.residual <= gate;
                            all_pass &= pass;
                            table.push(identity_row("boundary", &r, pass));
                        }
                        if run_combined {
                            let r =
                                core::verify_combined_identity(k, n, &ctx, &num_table, form)?;
                            let pass = r.residual <= gate;
                            all_pass &= pass;
                            table.push(identity_row("combined", &r, pass));
                        }
                    }
                }
            }
            if run_relation {
                let gate = threshold.unwrap_or(1e-9);
                for n in 1..=n_max {
                    let from_number = core::genocchi_number(n + 1, &ctx) / (n as f64 + 1.0);
                    let from_series =
                        core::zeta_weighted(Complex64::new(-(n as f64), 0.0), &ctx, &policy)?
                            .value
                            .re;
                    let residual = (from_number - from_series).abs() / from_number.abs().max(1.0);
                    let pass = residual <= gate;
                    all_pass &= pass;
                    table.push(vec![
                        Cell::Str("relation".into()),
                        Cell::Str("corrected".into()),
                        Cell::UInt(0),
                        Cell::UInt(n as u64),
                        Cell::Float(from_series),
                        Cell::Float(from_number),
                        Cell::Float(residual),
                        Cell::Bool(pass),
                    ]);
                }
            }
            if run_coherence {
                let gate = threshold.unwrap_or(1e-8);
                let tab = core::GenocchiTable::build(&ctx, n_max.max(1));
                for n in 1..=n_max.max(1) {
                    let mut worst = (0.0f64, 0.0f64, 0.0f64);
                    for w in [-0.5, -0.25, 0.0, 0.25, 0.5] {
                        let wc = Complex64::new(w, 0.0);
                        let exact = core::continued_poly(
                            n as f64,
                            wc,
                            &ctx,
                            ContinuationMode::IntegerExact,
                            &policy,
                        )?;
                        let poly = core::genocchi_poly(n, wc, &ctx, &tab)?;
                        let dev = (exact - poly).norm();
                        if dev >= worst.2 {
                            worst = (exact.re, poly.re, dev);
                        }
                    }
                    let pass = worst.2 <= gate;
                    all_pass &= pass;
                    table.push(vec![
                        Cell::Str("coherence".into()),
                        Cell::Str("integer-exact".into()),
                        Cell::UInt(0),
                        Cell::UInt(n as u64),
                        Cell::Float(worst.0),
                        Cell::Float(worst.1),
                        Cell::Float(worst.2),
                        Cell::Bool(pass),
                    ]);
                }
            }

            let mut meta = base_meta("verify", &common);
            meta.insert(
                "suite".into(),
                json!(match suite {
                    SuiteArg::Boundary => "boundary",
                    SuiteArg::Combined => "combined",
                    SuiteArg::Relation => "relation",
                    SuiteArg::Coherence => "coherence",
                    SuiteArg::All => "all",
                }),
            );
            meta.insert("form".into(), json!(form.to_string()));
            meta.insert("k_max".into(), json!(k_max));
            meta.insert("n_max".into(), json!(n_max));
            if let Some(t) = threshold {
                meta.insert("threshold".into(), json!(t));
            }
            let failing = table
                .rows
                .iter()
                .filter(|r| matches!(r.last(), Some(Cell::Bool(false))))
                .count();
            emit(&common, &table, meta, None)?;
            if all_pass {
                Ok(())
            } else {
                Err(CliError::Verification(format!(
                    "{failing} identity check(s) exceeded the residual threshold"
                )))
            }
        }
    }
}

fn identity_row(suite: &str, r: &core::IdentityReport, pass: bool) -> Vec<Cell> {
    vec![
        Cell::Str(suite.into()),
        Cell::Str(r.form.to_string()),
        Cell::UInt(r.k as u64),
        Cell::UInt(r.n as u64),
        Cell::Float(r.lhs),
        Cell::Float(r.rhs),
        Cell::Float(r.residual),
        Cell::Bool(pass),
    ]
}
