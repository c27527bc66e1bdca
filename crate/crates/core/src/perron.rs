//! Weighted partial sums of the coefficients of `f` and the Perron integral
//!
//! ```text
//! J(x, w) = (1 / 2 pi i) int_{(2)} f(s + w) x^s / (s (s+1) (s+2) (s+3) (s+4)) ds
//! ```
//!
//! `J` is computed three ways: as the finite sum `A_4(x, w) / x^4`, by
//! trapezoid quadrature on the vertical line, and by moving the line to
//! `Re s = -w`, picking up the residues at `s = 1 - w` and `s = 0`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::fproduct::{f_eval, lambda, CharacterPair, CoefficientTable};
use crate::lfuncs::{ComplexPoint, EvalPolicy};
use crate::report::{format_sig12, json_number, write_csv, Render, ScanKind, ScanReport};
use crate::special::exp_integral_e1;

/// Largest truncation estimate accepted from a line quadrature.
pub const CONVERGENCE_LIMIT: f64 = 1e-4;
/// Minimum distance of `w` from 0 and 1 for the contour shift.
pub const POLE_MARGIN: f64 = 0.05;
/// Exponents of the growth envelope `(q_1 q_2)^{1.1} |t|^{2.1}` for `f`.
pub const ENVELOPE_Q_EXPONENT: f64 = 1.1;
pub const ENVELOPE_T_EXPONENT: f64 = 2.1;
/// Growth-check ratios above this are flagged.
pub const GROWTH_FLAG: f64 = 10.0;

/// Validated `(x, w, k)` for the partial sums `A_k(x, w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumQuery {
    x: f64,
    w: f64,
    k: u32,
}

impl PartialSumQuery {
    pub fn new(x: f64, w: f64, k: u32) -> Result<Self> {
        if !(x >= 1.0 && x.is_finite()) {
            return Err(Error::InvalidArgument(format!("x must be >= 1, got {x}")));
        }
        if !(w > 0.0 && w < 1.0) {
            return Err(Error::InvalidArgument(format!("w must lie in (0, 1), got {w}")));
        }
        if k > 4 {
            return Err(Error::InvalidArgument(format!("k must be at most 4, got {k}")));
        }
        Ok(Self { x, w, k })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

fn covered(table: &CoefficientTable, x: f64) -> Result<usize> {
    let needed = x.floor() as usize;
    if needed > table.nmax() {
        return Err(Error::TableTooShort {
            nmax: table.nmax(),
            needed,
        });
    }
    Ok(needed)
}

/// `A_0(x, w) = sum_{n <= x} a_n n^{-w}`.
pub fn partial_sum_a0(table: &CoefficientTable, q: &PartialSumQuery) -> Result<f64> {
    let top = covered(table, q.x)?;
    Ok((1..=top)
        .filter(|&n| table.get(n) != 0)
        .map(|n| table.value(n) * (n as f64).powf(-q.w))
        .sum())
}

/// `A_k(x, w) = sum_{n <= x} a_n n^{-w} (x - n)^k / k!`, the k-fold integral
/// of the step function `A_0`.
pub fn iterated_sum_ak(table: &CoefficientTable, q: &PartialSumQuery) -> Result<f64> {
    if q.k == 0 {
        return partial_sum_a0(table, q);
    }
    let top = covered(table, q.x)?;
    let k = q.k as i32;
    let s: f64 = (1..=top)
        .filter(|&n| table.get(n) != 0)
        .map(|n| table.value(n) * (n as f64).powf(-q.w) * (q.x - n as f64).powi(k))
        .sum();
    Ok(s / factorial(q.k))
}

/// `A_0(x, w)` at each sample point; passes when every value is at least 1.
pub fn floor_samples(table: &CoefficientTable, samples: &[(f64, f64)]) -> Result<ScanReport> {
    let support: Vec<(f64, f64)> = table
        .iter()
        .filter(|&(_, a)| a != 0)
        .map(|(n, a)| (n as f64, a as f64))
        .collect();
    let mut report = ScanReport::new(ScanKind::FloorSamples, "sample", &["x", "w", "a0"])
        .with_param("d1", table.pair().d1())
        .with_param("d2", table.pair().d2());
    for (i, &(x, w)) in samples.iter().enumerate() {
        let q = PartialSumQuery::new(x, w, 0)?;
        covered(table, q.x)?;
        let a0: f64 = support
            .iter()
            .take_while(|&&(n, _)| n <= x)
            .map(|&(n, a)| a * n.powf(-w))
            .sum();
        report.pass &= a0 >= 1.0;
        report.push_row(i.to_string(), vec![x, w, a0]);
    }
    report.compute_extrema("a0");
    Ok(report)
}

/// `(c_k, x_k)` with `A_k(x, w) >= c_k x^k` for all `x >= x_k`, any pair and
/// any `w`: `c_0 = x_0 = 1`, `x_m = 2 x_{m-1}`, `c_m = c_{m-1} (1 - 2^{-m}) / m`.
pub fn lower_bound_constants(k: u32) -> Result<(f64, f64)> {
    if k > 4 {
        return Err(Error::InvalidArgument(format!("k must be at most 4, got {k}")));
    }
    let (mut c, mut x) = (1.0, 1.0);
    for m in 1..=k {
        c *= (1.0 - 0.5f64.powi(m as i32)) / m as f64;
        x *= 2.0;
    }
    Ok((c, x))
}

/// `(1 - 1/y)^k / k!`, the value of
/// `(1 / 2 pi i) int_{(2)} y^s ds / (s (s+1) ... (s+k))` for `y >= 1`.
pub fn kernel(y: f64, k: u32) -> Result<f64> {
    if !(y >= 1.0) {
        return Err(Error::InvalidArgument(format!("kernel needs y >= 1, got {y}")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("kernel order must be positive".into()));
    }
    Ok((1.0 - 1.0 / y).powi(k as i32) / factorial(k))
}

/// `J(x, w) = A_4(x, w) / x^4` as a finite sum.
pub fn j_sum_oracle(table: &CoefficientTable, x: f64, w: f64) -> Result<f64> {
    let q = PartialSumQuery::new(x, w, 4)?;
    Ok(iterated_sum_ak(table, &q)? / x.powi(4))
}

/// Discretization of a vertical-line integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    line_sigma: f64,
    height: f64,
    step: f64,
}

impl QuadratureSpec {
    pub fn new(line_sigma: f64, height: f64, step: f64) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
        }
        if !(height >= 10.0 * step && height.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "height {height} must be at least 10 steps of {step}"
            )));
        }
        if !line_sigma.is_finite() {
            return Err(Error::InvalidArgument("line abscissa must be finite".into()));
        }
        Ok(Self {
            line_sigma,
            height,
            step,
        })
    }

    pub fn line_sigma(&self) -> f64 {
        self.line_sigma
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn with_line(self, line_sigma: f64) -> Self {
        Self { line_sigma, ..self }
    }

    fn nodes(&self) -> usize {
        (self.height / self.step).round() as usize
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            line_sigma: 2.0,
            height: 200.0,
            step: 0.05,
        }
    }
}

/// `f(abscissa + i t_j)` at `t_j = j * step`, `j = 0..=n`.
///
/// The samples depend on the pair and the abscissa only, so one set serves
/// every `x` (and, on `Re(s + w) = 0`, every `w`).
#[derive(Debug, Clone)]
pub struct LineSamples {
    abscissa: f64,
    step: f64,
    values: Vec<Complex64>,
}

impl LineSamples {
    pub fn new(
        pair: &CharacterPair,
        abscissa: f64,
        spec: &QuadratureSpec,
        policy: &EvalPolicy,
    ) -> Result<Self> {
        let n = spec.nodes();
        let step = spec.height / n as f64;
        let values = (0..=n)
            .into_par_iter()
            .map(|j| f_eval(ComplexPoint::new(abscissa, j as f64 * step), pair, policy))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            abscissa,
            step,
            values,
        })
    }

    pub fn abscissa(&self) -> f64 {
        self.abscissa
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn height(&self) -> f64 {
        self.step * (self.values.len() - 1) as f64
    }

    pub fn t(&self, j: usize) -> f64 {
        j as f64 * self.step
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// `int_0^H g` by the trapezoid rule for samples of an even function on
/// `[-H, H]`; `gregory` adds end corrections at `H` through fourth
/// backward differences.
fn half_line_trapezoid(g: &[f64], h: f64, gregory: bool) -> f64 {
    let n = g.len() - 1;
    let mut sum = 0.5 * (g[0] + g[n]);
    sum += g[1..n].iter().sum::<f64>();
    let mut total = h * sum;
    if gregory && n >= 4 {
        let d1 = g[n] - g[n - 1];
        let d2 = g[n] - 2.0 * g[n - 1] + g[n - 2];
        let d3 = g[n] - 3.0 * g[n - 1] + 3.0 * g[n - 2] - g[n - 3];
        let d4 = g[n] - 4.0 * g[n - 1] + 6.0 * g[n - 2] - 4.0 * g[n - 3] + g[n - 4];
        total -= h * (d1 / 12.0 + d2 / 24.0 + 19.0 * d3 / 720.0 + 3.0 * d4 / 160.0);
    }
    total
}

/// `prod_{j=0}^{k} (s + j)`.
fn pole_product(s: Complex64, k: u32) -> Complex64 {
    (0..=k).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (s + j as f64))
}

/// A quadrature value with a bound on the discarded tails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub truncation_estimate: f64,
}

/// `(1/pi) int_0^H Re[f(s + w) x^s / prod (s + j)] dt` along `s = c + it`,
/// where `samples` hold `f(c + w + it)`.
fn perron_line_integral(samples: &LineSamples, c: f64, x: f64, k: u32) -> f64 {
    let lx = x.ln();
    let g: Vec<f64> = samples
        .values
        .iter()
        .enumerate()
        .map(|(j, fv)| {
            let s = Complex64::new(c, samples.t(j));
            let xs = Complex64::from_polar((c * lx).exp(), s.im * lx);
            (fv * xs / pole_product(s, k)).re
        })
        .collect();
    half_line_trapezoid(&g, samples.step, false) / PI
}

/// `J(x, w)` from precomputed samples of `f` on `Re = c + w` with `c + w > 1`.
pub fn j_quadrature_from_samples(
    samples: &LineSamples,
    pair: &CharacterPair,
    x: f64,
    w: f64,
    policy: &EvalPolicy,
) -> Result<QuadratureResult> {
    let c = samples.abscissa - w;
    if c + w <= 1.0 {
        return Err(Error::InvalidArgument(format!(
            "line Re s = {c} is not right of the pole of f(s + {w})"
        )));
    }
    let value = perron_line_integral(samples, c, x, 4);
    // |f(c + w + it)| <= f(c + w) because a_n >= 0, and |prod (s + j)| >= t^5
    let f_abs = f_eval(ComplexPoint::real(c + w), pair, policy)?.re;
    let h = samples.height();
    let truncation_estimate = f_abs * x.powf(c) / (4.0 * PI * h.powi(4));
    if truncation_estimate > CONVERGENCE_LIMIT {
        return Err(Error::NonConvergence {
            estimate: truncation_estimate,
            limit: CONVERGENCE_LIMIT,
        });
    }
    Ok(QuadratureResult {
        value,
        truncation_estimate,
    })
}

fn check_xw(x: f64, w: f64) -> Result<()> {
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!("x must be >= 1, got {x}")));
    }
    if !(w > 0.0 && w < 1.0) {
        return Err(Error::InvalidArgument(format!("w must lie in (0, 1), got {w}")));
    }
    Ok(())
}

/// Trapezoid approximation of `J(x, w)` on the line `Re s = spec.line_sigma`.
pub fn j_quadrature(
    x: f64,
    w: f64,
    pair: &CharacterPair,
    spec: &QuadratureSpec,
    policy: &EvalPolicy,
) -> Result<QuadratureResult> {
    check_xw(x, w)?;
    let samples = LineSamples::new(pair, spec.line_sigma + w, spec, policy)?;
    j_quadrature_from_samples(&samples, pair, x, w, policy)
}

/// The three pieces of `J(x, w)` after moving the line to `Re s = -w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    /// Residue at `s = 1 - w`: `lambda x^{1-w} / ((1-w)(2-w)(3-w)(4-w)(5-w))`.
    pub main_term: f64,
    /// Residue at `s = 0`: `f(w) / 4!`.
    pub fw_term: f64,
    /// The integral over `Re s = -w`.
    pub remainder: f64,
    pub total: f64,
    /// Tail bound for the remainder from the growth envelope of `f`.
    pub truncation_estimate: f64,
}

/// `lambda x^{1-w} / prod_{j=0}^{4} (1 - w + j)`.
pub fn main_term(pair: &CharacterPair, x: f64, w: f64) -> f64 {
    let s = 1.0 - w;
    let denom: f64 = (0..=4).map(|j| s + j as f64).product();
    lambda(pair) * x.powf(s) / denom
}

/// Largest `|f(it)| / ((q_1 q_2)^{1.1} |t|^{2.1})` over samples with `t >= 10`.
fn observed_envelope(samples: &LineSamples, pair: &CharacterPair) -> f64 {
    let qq = pair.conductor_product().powf(ENVELOPE_Q_EXPONENT);
    samples
        .values
        .iter()
        .enumerate()
        .filter(|(j, _)| samples.t(*j) >= 10.0)
        .map(|(j, v)| v.norm() / (qq * samples.t(j).powf(ENVELOPE_T_EXPONENT)))
        .fold(0.0, f64::max)
}

/// Contour-shift decomposition using samples of `f(it)`.
pub fn contour_decomposition_from_samples(
    critical: &LineSamples,
    x: f64,
    w: f64,
    pair: &CharacterPair,
    policy: &EvalPolicy,
) -> Result<Decomposition> {
    check_xw(x, w)?;
    if w < POLE_MARGIN || w > 1.0 - POLE_MARGIN {
        return Err(Error::InvalidArgument(format!(
            "w = {w} is within {POLE_MARGIN} of a pole"
        )));
    }
    if critical.abscissa != 0.0 {
        return Err(Error::InvalidArgument("remainder samples must lie on Re s = 0".into()));
    }
    let main = main_term(pair, x, w);
    let fw = f_eval(ComplexPoint::real(w), pair, policy)?.re / 24.0;
    let remainder = perron_line_integral(critical, -w, x, 4);

    // |f(it)| <= C (q1 q2)^{1.1} t^{2.1} with C twice the largest observed
    // ratio; |prod (s + j)| >= t^5 on Re s = -w
    let c_env = 2.0 * observed_envelope(critical, pair);
    let h = critical.height();
    let truncation_estimate = c_env
        * pair.conductor_product().powf(ENVELOPE_Q_EXPONENT)
        * x.powf(-w)
        * h.powf(ENVELOPE_T_EXPONENT - 4.0)
        / ((4.0 - ENVELOPE_T_EXPONENT) * PI);
    if truncation_estimate > CONVERGENCE_LIMIT {
        return Err(Error::NonConvergence {
            estimate: truncation_estimate,
            limit: CONVERGENCE_LIMIT,
        });
    }
    Ok(Decomposition {
        main_term: main,
        fw_term: fw,
        remainder,
        total: main + fw + remainder,
        truncation_estimate,
    })
}

/// `J(x, w) = main + f(w)/4! + remainder`.
pub fn contour_decomposition(
    x: f64,
    w: f64,
    pair: &CharacterPair,
    spec: &QuadratureSpec,
    policy: &EvalPolicy,
) -> Result<Decomposition> {
    check_xw(x, w)?;
    let critical = LineSamples::new(pair, 0.0, spec, policy)?;
    contour_decomposition_from_samples(&critical, x, w, pair, policy)
}

/// `int_H^inf e^{itL} / ((c + it)(c + 1 + it)) dt`.
fn perron_tail_kernel(l: f64, c: f64, h: f64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    if l == 0.0 {
        let a = Complex64::new(c, h);
        let b = Complex64::new(c + 1.0, h);
        return i * (a / b).ln();
    }
    // int_H^inf e^{itL} / (c + it) dt = -i e^{-cL} E1(-L (c + iH))
    let one = |cc: f64| -i * (-cc * l).exp() * exp_integral_e1(-l * Complex64::new(cc, h));
    one(c) - one(c + 1.0)
}

/// Quadrature of the first-order Perron integral
/// `A_1(x, w) = (1 / 2 pi i) int_{(c)} f(s + w) x^{s+1} / (s (s+1)) ds`.
///
/// The integrand only decays like `|t|^{-2}`, so the part beyond the
/// height is added term by term from the Dirichlet series of `f` through
/// exponential integrals, and the finite part carries Gregory end
/// corrections. The estimate bounds the coefficients beyond the table.
pub fn a1_quadrature(
    x: f64,
    w: f64,
    table: &CoefficientTable,
    spec: &QuadratureSpec,
    policy: &EvalPolicy,
) -> Result<QuadratureResult> {
    check_xw(x, w)?;
    let c = spec.line_sigma;
    if c + w <= 1.0 {
        return Err(Error::InvalidArgument(format!(
            "line Re s = {c} is not right of the pole of f(s + {w})"
        )));
    }
    let pair = table.pair();
    let samples = LineSamples::new(pair, c + w, spec, policy)?;
    let lx = x.ln();
    let g: Vec<f64> = samples
        .values
        .iter()
        .enumerate()
        .map(|(j, fv)| {
            let s = Complex64::new(c, samples.t(j));
            let xs = Complex64::from_polar(((c + 1.0) * lx).exp(), s.im * lx);
            (fv * xs / pole_product(s, 1)).re
        })
        .collect();
    let h = samples.height();
    let body = half_line_trapezoid(&g, samples.step, true) / PI;

    let tail: f64 = table
        .iter()
        .filter(|&(_, a)| a != 0)
        .map(|(n, a)| {
            let nf = n as f64;
            let weight = a as f64 * nf.powf(-w - c) * x.powf(c + 1.0);
            weight * perron_tail_kernel(lx - nf.ln(), c, h).re
        })
        .sum::<f64>()
        / PI;

    let full = f_eval(ComplexPoint::real(c + w), pair, policy)?.re;
    let partial = table.partial_series(Complex64::new(c + w, 0.0)).re;
    let truncation_estimate = x.powf(c + 1.0) * (full - partial).max(0.0) / (PI * h);
    if truncation_estimate > CONVERGENCE_LIMIT {
        return Err(Error::NonConvergence {
            estimate: truncation_estimate,
            limit: CONVERGENCE_LIMIT,
        });
    }
    Ok(QuadratureResult {
        value: body + tail,
        truncation_estimate,
    })
}

/// `|f(sigma + it)| / ((q_1 q_2)^{1.1} |t|^{2.1})` over a grid.
pub fn f_growth_check(
    pair: &CharacterPair,
    sigmas: &[f64],
    ts: &[f64],
    policy: &EvalPolicy,
) -> Result<ScanReport> {
    if let Some(s) = sigmas.iter().find(|&&s| !(s >= -0.25)) {
        return Err(Error::InvalidArgument(format!("growth grid needs sigma >= -0.25, got {s}")));
    }
    if let Some(t) = ts.iter().find(|&&t| !(5.0..=100.0).contains(&t.abs())) {
        return Err(Error::InvalidArgument(format!("growth grid needs 5 <= |t| <= 100, got {t}")));
    }
    let mut report = ScanReport::new(ScanKind::FGrowth, "point", &["abs_f", "ratio", "flag"])
        .with_param("d1", pair.d1())
        .with_param("d2", pair.d2())
        .with_param("q_exponent", ENVELOPE_Q_EXPONENT)
        .with_param("t_exponent", ENVELOPE_T_EXPONENT)
        .with_param("threshold", GROWTH_FLAG);
    let points: Vec<(f64, f64)> = sigmas
        .iter()
        .flat_map(|&s| ts.iter().map(move |&t| (s, t)))
        .collect();
    let qq = pair.conductor_product().powf(ENVELOPE_Q_EXPONENT);
    let rows = points
        .par_iter()
        .map(|&(s, t)| {
            let v = f_eval(ComplexPoint::new(s, t), pair, policy)?.norm();
            Ok((s, t, v, v / (qq * t.abs().powf(ENVELOPE_T_EXPONENT))))
        })
        .collect::<Result<Vec<_>>>()?;
    for (s, t, v, ratio) in rows {
        let flag = ratio > GROWTH_FLAG;
        report.pass &= !flag;
        report.push_row(format!("{s}:{t}"), vec![v, ratio, flag as u8 as f64]);
    }
    report.compute_extrema("ratio");
    Ok(report)
}

/// One exported comparison of the three routes to `J(x, w)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionRecord {
    pub x: f64,
    pub w: f64,
    pub d1: i64,
    pub d2: i64,
    pub oracle: f64,
    pub quadrature: f64,
    pub main: f64,
    pub fw: f64,
    pub remainder: f64,
    /// `|main + fw + remainder - oracle|`.
    pub abs_error: f64,
}

impl DecompositionRecord {
    pub const FIELDS: [&'static str; 10] = [
        "x",
        "w",
        "d1",
        "d2",
        "oracle",
        "quadrature",
        "main",
        "fw",
        "remainder",
        "abs_error",
    ];

    pub fn new(x: f64, w: f64, pair: &CharacterPair, oracle: f64, quadrature: f64, dec: &Decomposition) -> Self {
        Self {
            x,
            w,
            d1: pair.d1().get(),
            d2: pair.d2().get(),
            oracle,
            quadrature,
            main: dec.main_term,
            fw: dec.fw_term,
            remainder: dec.remainder,
            abs_error: (dec.total - oracle).abs(),
        }
    }

    fn numbers(&self) -> [f64; 10] {
        [
            self.x,
            self.w,
            self.d1 as f64,
            self.d2 as f64,
            self.oracle,
            self.quadrature,
            self.main,
            self.fw,
            self.remainder,
            self.abs_error,
        ]
    }
}

impl Render for DecompositionRecord {
    fn to_csv(&self) -> String {
        let header: Vec<String> = Self::FIELDS.iter().map(|s| s.to_string()).collect();
        let row: Vec<String> = self.numbers().iter().map(|&v| format_sig12(v)).collect();
        write_csv(&header, std::iter::once(row))
    }

    fn to_json(&self) -> String {
        let mut m = Map::new();
        for (k, v) in Self::FIELDS.iter().zip(self.numbers()) {
            let value = match *k {
                "d1" => Value::from(self.d1),
                "d2" => Value::from(self.d2),
                _ => json_number(v),
            };
            m.insert(k.to_string(), value);
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("json");
        s.push('\n');
        s
    }
}

/// Runs all three routes at one `(x, w)`.
pub fn decomposition_record(
    table: &CoefficientTable,
    x: f64,
    w: f64,
    spec: &QuadratureSpec,
    policy: &EvalPolicy,
) -> Result<DecompositionRecord> {
    let pair = *table.pair();
    let oracle = j_sum_oracle(table, x, w)?;
    let quad = j_quadrature(x, w, &pair, spec, policy)?;
    let dec = contour_decomposition(x, w, &pair, spec, policy)?;
    Ok(DecompositionRecord::new(x, w, &pair, oracle, quad.value, &dec))
}
