//! Riemann, Hurwitz, and Dirichlet L-function evaluation on `sigma > -1`.
//!
//! Everything runs through Euler–Maclaurin summation of the Hurwitz zeta
//! function. For a nonprincipal character the pole terms of the individual
//! `zeta(s, a/q)` cancel because `sum_a chi(a) = 0`; [`dirichlet_l`]
//! exploits that cancellation explicitly, so it is regular at `s = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::characters::QuadraticCharacter;
use crate::error::{Error, Result};
use crate::report::{ScanKind, ScanReport};
use crate::special::{digamma, exprel, BERNOULLI_OVER_FACTORIAL};

/// A point `s = sigma + i t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub sigma: f64,
    pub t: f64,
}

impl ComplexPoint {
    pub fn new(sigma: f64, t: f64) -> Self {
        Self { sigma, t }
    }

    pub fn real(sigma: f64) -> Self {
        Self { sigma, t: 0.0 }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }
}

/// Accuracy knobs for Euler–Maclaurin evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPolicy {
    em_order: usize,
    split_point: usize,
    target_abs_error: f64,
}

pub const MAX_EM_ORDER: usize = BERNOULLI_OVER_FACTORIAL.len();
const MAX_SPLIT: usize = 1 << 22;
/// Closest approach to the pole of zeta that is evaluated directly.
pub const POLE_CLEARANCE: f64 = 1e-3;

impl EvalPolicy {
    pub fn new(em_order: usize, split_point: usize, target_abs_error: f64) -> Result<Self> {
        if !(2..=MAX_EM_ORDER).contains(&em_order) {
            return Err(Error::InvalidArgument(format!(
                "em_order must lie in 2..={MAX_EM_ORDER}, got {em_order}"
            )));
        }
        if split_point < 10 {
            return Err(Error::InvalidArgument(format!(
                "split_point must be at least 10, got {split_point}"
            )));
        }
        if !(target_abs_error > 0.0 && target_abs_error.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "target_abs_error must be positive, got {target_abs_error}"
            )));
        }
        Ok(Self {
            em_order,
            split_point,
            target_abs_error,
        })
    }

    pub fn em_order(&self) -> usize {
        self.em_order
    }

    pub fn split_point(&self) -> usize {
        self.split_point
    }

    pub fn target_abs_error(&self) -> f64 {
        self.target_abs_error
    }
}

impl Default for EvalPolicy {
    fn default() -> Self {
        Self {
            em_order: 8,
            split_point: 20,
            target_abs_error: 1e-12,
        }
    }
}

fn check_region(s: Complex64) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("non-finite point {s}")));
    }
    if s.re <= -1.0 {
        return Err(Error::Region(s.re));
    }
    Ok(())
}

fn check_pole(s: Complex64) -> Result<()> {
    if (s - 1.0).norm() < POLE_CLEARANCE {
        return Err(Error::Pole {
            sigma: s.re,
            t: s.im,
        });
    }
    Ok(())
}

/// `x^{-s}` for real `x > 0`.
#[inline]
fn pow_neg(x: f64, s: Complex64) -> Complex64 {
    let l = x.ln();
    Complex64::from_polar((-s.re * l).exp(), -s.im * l)
}

/// Bound on the Euler–Maclaurin remainder after `m` correction terms with
/// the sum split at `x = N + a`.
fn remainder_bound(s: Complex64, x: f64, m: usize) -> f64 {
    let denom = s.re + 2.0 * m as f64 - 1.0;
    if denom <= 0.0 {
        return f64::INFINITY;
    }
    let log_poch: f64 = (0..2 * m).map(|j| (s + j as f64).norm().ln()).sum();
    let log_bound = 4f64.ln() + log_poch - 2.0 * m as f64 * (2.0 * PI).ln()
        + (1.0 - s.re - 2.0 * m as f64) * x.ln()
        - denom.ln();
    log_bound.exp()
}

/// Smallest `N = split * 2^j` whose remainder bound meets the target.
fn choose_cutoff(s: Complex64, alpha_min: f64, policy: &EvalPolicy) -> usize {
    let mut n = policy.split_point;
    while n < MAX_SPLIT
        && remainder_bound(s, n as f64 + alpha_min, policy.em_order) > policy.target_abs_error
    {
        n *= 2;
    }
    n
}

/// `x^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1}`.
fn em_corrections(s: Complex64, x: f64, m: usize) -> Complex64 {
    let xs = pow_neg(x, s);
    let mut sum = xs * 0.5;
    let mut poch = s;
    let mut xpow = xs / x;
    let inv_x2 = 1.0 / (x * x);
    for (k, &c) in BERNOULLI_OVER_FACTORIAL.iter().take(m).enumerate() {
        sum += poch * xpow * c;
        let j = 2.0 * (k + 1) as f64;
        poch *= (s + (j - 1.0)) * (s + j);
        xpow *= inv_x2;
    }
    sum
}

/// Hurwitz zeta `zeta(s, a) = sum_{n>=0} (n + a)^{-s}` for `0 < a <= 1`.
pub fn hurwitz_zeta(s: ComplexPoint, a: f64, policy: &EvalPolicy) -> Result<Complex64> {
    let s = s.to_complex();
    check_region(s)?;
    check_pole(s)?;
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::InvalidArgument(format!("Hurwitz parameter a = {a} outside (0, 1]")));
    }
    let n = choose_cutoff(s, a, policy);
    let mut head = Complex64::new(0.0, 0.0);
    for k in 0..n {
        head += pow_neg(k as f64 + a, s);
    }
    let x = n as f64 + a;
    let pole = pow_neg(x, s - 1.0) / (s - 1.0);
    Ok(head + pole + em_corrections(s, x, policy.em_order))
}

pub fn riemann_zeta(s: ComplexPoint, policy: &EvalPolicy) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0, policy)
}

/// `L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q)`.
pub fn dirichlet_l(s: ComplexPoint, chi: &QuadraticCharacter, policy: &EvalPolicy) -> Result<Complex64> {
    let values = chi.period_values();
    dirichlet_l_with_values(s.to_complex(), &values, policy)
}

/// As [`dirichlet_l`] with the period `chi(1), ..., chi(q)` supplied.
pub(crate) fn dirichlet_l_with_values(
    s: Complex64,
    values: &[i8],
    policy: &EvalPolicy,
) -> Result<Complex64> {
    check_region(s)?;
    let q = values.len();
    let qf = q as f64;
    let n = choose_cutoff(s, 1.0 / qf, policy);
    let nf = n as f64;

    // head: sum_{m <= qN} chi(m) m^{-s}
    let mut head = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let base = (k * q) as f64;
        for (i, &v) in values.iter().enumerate() {
            if v != 0 {
                let term = pow_neg(base + (i + 1) as f64, s);
                if v > 0 {
                    head += term;
                } else {
                    head -= term;
                }
            }
        }
    }

    // pole terms: [(N + a)^{1-s} - N^{1-s}] / (s - 1), the N^{1-s} part
    // cancelling over a full period
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let n_pow = pow_neg(nf, s - 1.0);
    let mut tail = Complex64::new(0.0, 0.0);
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let alpha = (i + 1) as f64 / qf;
        let x = nf + alpha;
        let ell = (alpha / nf).ln_1p();
        let pole = -n_pow * ell * exprel(one_minus_s * ell);
        tail += (pole + em_corrections(s, x, policy.em_order)) * v as f64;
    }
    Ok(head + pow_neg(qf, s) * tail)
}

/// `L(1, chi) = -(1/q) sum_a chi(a) psi(a/q)` for a nonprincipal character.
pub fn l_at_one(chi: &QuadraticCharacter) -> f64 {
    let q = chi.modulus();
    let qf = q as f64;
    let mut sum = 0.0;
    for a in 1..=q {
        let v = chi.value(a);
        if v != 0 {
            sum += v as f64 * digamma(a as f64 / qf);
        }
    }
    -sum / qf
}

/// Truncated series `sum_{n <= T} chi(n)/n` with the error scale `q / T`.
pub fn l_at_one_truncated(chi: &QuadraticCharacter, terms: u64) -> Result<(f64, f64)> {
    if terms == 0 {
        return Err(Error::InvalidArgument("truncation point must be at least 1".into()));
    }
    let q = chi.modulus();
    let period = chi.period_values();
    let mut value = 0.0;
    for n in 1..=terms {
        let v = period[((n - 1) % q) as usize];
        if v != 0 {
            value += v as f64 / n as f64;
        }
    }
    Ok((value, q as f64 / terms as f64))
}

/// `|L(s)| / ((q|t|)^{1/2 - sigma} |L(1 - s)|)` for real `chi`.
pub fn fe_ratio(s: ComplexPoint, chi: &QuadraticCharacter, policy: &EvalPolicy) -> Result<f64> {
    if !(-0.5..=1.5).contains(&s.sigma) {
        return Err(Error::InvalidArgument(format!(
            "fe_ratio needs -0.5 <= sigma <= 1.5, got {}",
            s.sigma
        )));
    }
    if s.t.abs() < 5.0 {
        return Err(Error::InvalidArgument(format!("fe_ratio needs |t| >= 5, got {}", s.t)));
    }
    let values = chi.period_values();
    let z = s.to_complex();
    let left = dirichlet_l_with_values(z, &values, policy)?.norm();
    let right = dirichlet_l_with_values(Complex64::new(1.0, 0.0) - z, &values, policy)?.norm();
    if right < 1e-14 {
        return Err(Error::NearZero {
            what: "|L(1-s, chi)|",
            value: right,
        });
    }
    let scale = (chi.modulus() as f64 * s.t.abs()).powf(0.5 - s.sigma);
    Ok(left / (scale * right))
}

fn grid_points(sigmas: &[f64], ts: &[f64]) -> Vec<(f64, f64)> {
    sigmas
        .iter()
        .flat_map(|&sg| ts.iter().map(move |&t| (sg, t)))
        .collect()
}

/// `|L(s, chi_d)| / (|d| |t|)^{0.6}` over a grid; flags ratios above 10.
pub fn convexity_scan(
    chars: &[QuadraticCharacter],
    sigmas: &[f64],
    ts: &[f64],
    policy: &EvalPolicy,
) -> Result<ScanReport> {
    let mut report = ScanReport::new(ScanKind::Convexity, "point", &["abs_l", "ratio", "flag"])
        .with_param("exponent", 0.6)
        .with_param("threshold", 10);
    let points = grid_points(sigmas, ts);
    let jobs: Vec<(QuadraticCharacter, f64, f64)> = chars
        .iter()
        .flat_map(|c| points.iter().map(move |&(sg, t)| (*c, sg, t)))
        .collect();
    let rows: Vec<Result<(String, Vec<f64>)>> = jobs
        .par_iter()
        .map(|&(chi, sg, t)| {
            let v = dirichlet_l(ComplexPoint::new(sg, t), &chi, policy)?.norm();
            let ratio = v / (chi.modulus() as f64 * t.abs()).powf(0.6);
            let flag = if ratio > 10.0 { 1.0 } else { 0.0 };
            Ok((format!("{chi}@{sg}:{t}"), vec![v, ratio, flag]))
        })
        .collect();
    for r in rows {
        let (k, v) = r?;
        report.pass &= v[2] == 0.0;
        report.push_row(k, v);
    }
    report.compute_extrema("ratio");
    Ok(report)
}

/// `|zeta(sigma + it)| / |t|^{0.6}` over a grid; flags ratios above 10.
pub fn zeta_growth_scan(sigmas: &[f64], ts: &[f64], policy: &EvalPolicy) -> Result<ScanReport> {
    let mut report = ScanReport::new(ScanKind::ZetaGrowth, "point", &["abs_zeta", "ratio", "flag"])
        .with_param("exponent", 0.6)
        .with_param("threshold", 10);
    for (sg, t) in grid_points(sigmas, ts) {
        let v = riemann_zeta(ComplexPoint::new(sg, t), policy)?.norm();
        let ratio = v / t.abs().powf(0.6);
        let flag = ratio > 10.0;
        report.pass &= !flag;
        report.push_row(format!("{sg}:{t}"), vec![v, ratio, flag as u8 as f64]);
    }
    report.compute_extrema("ratio");
    Ok(report)
}

/// [`fe_ratio`] over a grid; passes when every ratio lies in `[lo, hi]`.
pub fn fe_ratio_scan(
    chars: &[QuadraticCharacter],
    sigmas: &[f64],
    ts: &[f64],
    window: (f64, f64),
    policy: &EvalPolicy,
) -> Result<ScanReport> {
    let mut report = ScanReport::new(ScanKind::FeRatio, "point", &["ratio", "flag"])
        .with_param("window_lo", window.0)
        .with_param("window_hi", window.1);
    let points = grid_points(sigmas, ts);
    for chi in chars {
        for &(sg, t) in &points {
            let r = fe_ratio(ComplexPoint::new(sg, t), chi, policy)?;
            let flag = !(window.0..=window.1).contains(&r);
            report.pass &= !flag;
            report.push_row(format!("{chi}@{sg}:{t}"), vec![r, flag as u8 as f64]);
        }
    }
    report.compute_extrema("ratio");
    Ok(report)
}
