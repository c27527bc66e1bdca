//! Argument parsing and dispatch for the `siegel` binary.
//!
//! Exit codes: 0 on success, 1 when a computation or file operation fails,
//! 2 when the command line itself is wrong.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use siegel_core::characters::{enumerate_fundamental, FundamentalDiscriminant, QuadraticCharacter};
use siegel_core::explorer::{
    f_beta_scan, l1_log_bound_scan, real_zero_scan, siegel_scan, siegel_walfisz_check,
};
use siegel_core::fproduct::{coefficients, pairs_within, CharacterPair};
use siegel_core::lfuncs::{dirichlet_l, riemann_zeta, ComplexPoint};
use siegel_core::perron::{
    contour_decomposition, f_growth_check, j_quadrature_from_samples, j_sum_oracle, DecompositionRecord,
    LineSamples,
};
use siegel_core::report::{Render, ScanKind, ScanReport};

pub mod config;

pub use config::{load_config, Format, RunConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] siegel_core::Error),
}

/// Largest |error| accepted by `perron verify`.
const VERIFY_TOLERANCE: f64 = 1e-5;

#[derive(Parser, Debug)]
#[command(name = "siegel", version, about = "Numerical checks around Siegel's theorem")]
struct Cli {
    /// Flat key=value config file (falls back to $SIEGEL_CONFIG)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format: csv or json
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for sampled checks
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quadratic characters
    Chars {
        #[command(subcommand)]
        cmd: CharsCmd,
    },
    /// L(s, chi_d), or zeta(s) without --d
    Lvalue(LvalueArgs),
    /// Dirichlet coefficients of f for a pair of characters
    Coeffs(CoeffsArgs),
    /// Perron integral checks
    Perron {
        #[command(subcommand)]
        cmd: PerronCmd,
    },
    /// Empirical scans
    Scan {
        #[command(subcommand)]
        cmd: ScanCmd,
    },
}

#[derive(Subcommand, Debug)]
enum CharsCmd {
    /// Fundamental discriminants with |d| <= limit
    List {
        #[arg(long)]
        limit: u64,
    },
}

#[derive(Args, Debug)]
struct LvalueArgs {
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    t: f64,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    d1: i64,
    #[arg(long, allow_hyphen_values = true)]
    d2: i64,
}

impl PairArgs {
    fn pair(&self) -> Result<CharacterPair, CliError> {
        Ok(CharacterPair::from_discriminants(self.d1, self.d2)?)
    }
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, default_value_t = 100)]
    nmax: usize,
}

#[derive(Subcommand, Debug)]
enum PerronCmd {
    /// Compare the line quadrature of J(x, w) with its finite-sum value
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', default_values_t = [2.0, 5.0, 10.0, 50.0, 120.0])]
        x: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_values_t = [0.3, 0.5, 0.9])]
        w: Vec<f64>,
        /// Draw this many random (x, w) points instead of the grid
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Residues plus remainder after moving the line to Re s = -w
    Decompose {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        w: f64,
    },
}

#[derive(Subcommand, Debug)]
enum ScanCmd {
    /// L(1, chi_d) |d|^eps over fundamental discriminants
    Siegel {
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long)]
        dmax: u64,
    },
    /// Sign changes of L(sigma, chi_d) on a grid
    Zeros {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, default_value_t = 0.05)]
        lo: f64,
        #[arg(long, default_value_t = 0.95)]
        hi: f64,
        #[arg(long, default_value_t = 100)]
        grid: usize,
    },
    /// Primes in progressions against li(x) / phi(q)
    Sw {
        #[arg(long, default_value_t = 1_000_000)]
        x: u64,
        #[arg(long, default_value_t = 30)]
        qmax: u64,
    },
    /// |f(sigma + it)| against (q1 q2)^1.1 |t|^2.1
    Growth {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [0.0, 0.5, 1.0])]
        sigma: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [10.0, 20.0, 50.0, 100.0])]
        t: Vec<f64>,
    },
    /// L(1, chi_d) / log |d|
    Logbound {
        #[arg(long)]
        dmax: u64,
    },
    /// Sign of f(beta) for all pairs with |d| <= dmax
    Fbeta {
        #[arg(long, default_value_t = 20)]
        dmax: u64,
        #[arg(long, value_delimiter = ',', default_values_t = [0.3, 0.5, 0.7, 0.9])]
        beta: Vec<f64>,
    },
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let mut cfg = load_config(cli.config.as_deref())?;
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(o) = cli.output {
        cfg.output = Some(o);
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    match cli.command {
        Command::Chars { cmd: CharsCmd::List { limit } } => emit_report(&chars_report(limit), &cfg, out),
        Command::Lvalue(a) => emit_report(&lvalue_report(&a, &cfg)?, &cfg, out),
        Command::Coeffs(a) => {
            if a.nmax == 0 {
                return Err(siegel_core::Error::InvalidArgument("nmax must be positive".into()).into());
            }
            let pair = a.pair.pair()?;
            let table = coefficients(&pair, a.nmax)?;
            let mut r = ScanReport::new(ScanKind::Coefficients, "n", &["a_n"])
                .with_param("d1", pair.d1())
                .with_param("d2", pair.d2())
                .with_param("nmax", a.nmax);
            for (n, v) in table.iter() {
                r.push_row(n.to_string(), vec![v as f64]);
            }
            emit_report(&r, &cfg, out)
        }
        Command::Perron { cmd } => match cmd {
            PerronCmd::Verify { pair, x, w, samples } => {
                let points: Vec<(f64, f64)> = match samples {
                    None => x.iter().flat_map(|&x| w.iter().map(move |&w| (x, w))).collect(),
                    Some(n) => {
                        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                        (0..n)
                            .map(|_| (rng.gen_range(1.0..120.0), rng.gen_range(0.05..0.95)))
                            .collect()
                    }
                };
                emit_report(&perron_verify(&pair.pair()?, &points, &cfg)?, &cfg, out)
            }
            PerronCmd::Decompose { pair, x, w } => {
                let pair = pair.pair()?;
                let policy = cfg.policy()?;
                let spec = cfg.quadrature()?;
                let table = coefficients(&pair, x.max(1.0).floor() as usize)?;
                let oracle = j_sum_oracle(&table, x, w)?;
                let line = LineSamples::new(&pair, spec.line_sigma() + w, &spec, &policy)?;
                let quad = j_quadrature_from_samples(&line, &pair, x, w, &policy)?;
                let dec = contour_decomposition(x, w, &pair, &spec, &policy)?;
                emit_report(&DecompositionRecord::new(x, w, &pair, oracle, quad.value, &dec), &cfg, out)
            }
        },
        Command::Scan { cmd } => {
            let r = match cmd {
                ScanCmd::Siegel { eps, dmax } => siegel_scan(eps, dmax)?,
                ScanCmd::Zeros { d, lo, hi, grid } => {
                    real_zero_scan(FundamentalDiscriminant::new(d)?, lo, hi, grid, &cfg.policy()?)?
                }
                ScanCmd::Sw { x, qmax } => siegel_walfisz_check(x, qmax)?,
                ScanCmd::Growth { pair, sigma, t } => f_growth_check(&pair.pair()?, &sigma, &t, &cfg.policy()?)?,
                ScanCmd::Logbound { dmax } => l1_log_bound_scan(dmax)?,
                ScanCmd::Fbeta { dmax, beta } => f_beta_scan(&pairs_within(dmax), &beta, &cfg.policy()?)?,
            };
            emit_report(&r, &cfg, out)
        }
    }
}

fn chars_report(limit: u64) -> ScanReport {
    let mut r = ScanReport::new(ScanKind::Characters, "d", &["modulus", "parity"]).with_param("limit", limit);
    for d in enumerate_fundamental(limit) {
        let chi = QuadraticCharacter::primitive(d);
        r.push_row(d.to_string(), vec![chi.modulus() as f64, chi.parity() as f64]);
    }
    r
}

fn lvalue_report(a: &LvalueArgs, cfg: &RunConfig) -> Result<ScanReport, CliError> {
    let policy = cfg.policy()?;
    let s = ComplexPoint::new(a.sigma, a.t);
    let (key, v) = match a.d {
        None => ("zeta".to_string(), riemann_zeta(s, &policy)?),
        Some(d) => (d.to_string(), dirichlet_l(s, &QuadraticCharacter::from_discriminant(d)?, &policy)?),
    };
    let mut r = ScanReport::new(ScanKind::LValue, "d", &["sigma", "t", "re", "im"]);
    r.push_row(key, vec![a.sigma, a.t, v.re, v.im]);
    Ok(r)
}

fn perron_verify(pair: &CharacterPair, points: &[(f64, f64)], cfg: &RunConfig) -> Result<ScanReport, CliError> {
    let policy = cfg.policy()?;
    let spec = cfg.quadrature()?;
    let xmax = points.iter().map(|p| p.0).fold(1.0, f64::max);
    let table = coefficients(pair, xmax.floor() as usize)?;
    let mut r = ScanReport::new(
        ScanKind::PerronVerify,
        "x:w",
        &["x", "w", "oracle", "quadrature", "abs_error", "truncation_estimate"],
    )
    .with_param("d1", pair.d1())
    .with_param("d2", pair.d2())
    .with_param("height", spec.height())
    .with_param("step", spec.step())
    .with_param("tolerance", VERIFY_TOLERANCE);
    // one set of line samples per distinct w
    let mut cache: Vec<(f64, LineSamples)> = Vec::new();
    for &(x, w) in points {
        if !cache.iter().any(|(cw, _)| *cw == w) {
            cache.push((w, LineSamples::new(pair, spec.line_sigma() + w, &spec, &policy)?));
        }
        let line = &cache.iter().find(|(cw, _)| *cw == w).expect("cached").1;
        let oracle = j_sum_oracle(&table, x, w)?;
        let q = j_quadrature_from_samples(line, pair, x, w, &policy)?;
        let e = (q.value - oracle).abs();
        r.pass &= e <= VERIFY_TOLERANCE;
        r.push_row(format!("{x}:{w}"), vec![x, w, oracle, q.value, e, q.truncation_estimate]);
    }
    r.compute_extrema("abs_error");
    Ok(r)
}

/// Renders in the configured format to the configured path, or to `out`.
pub fn emit_report(report: &dyn Render, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match cfg.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    match &cfg.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}
