//! Desk-scale scans: lower envelopes for `L(1, chi_d)`, sign scans for real
//! zeros, the sign of `f` on `(0, 1)`, `L(1, chi) / log q`, and prime counts
//! in progressions against `li(x) / phi(q)`.

use rayon::prelude::*;

use crate::characters::{enumerate_fundamental, FundamentalDiscriminant, QuadraticCharacter};
use crate::error::{Error, Result};
use crate::fproduct::CharacterPair;
use crate::lfuncs::{dirichlet_l, l_at_one, riemann_zeta, ComplexPoint, EvalPolicy};
use crate::report::{ScanKind, ScanReport};
use crate::sieve::for_each_prime;

/// Factors of `f(beta)` smaller than this in magnitude make its sign unreliable.
pub const NEAR_ZERO: f64 = 1e-12;
/// Pass threshold for `L(1, chi_d) / log |d|`.
pub const LOG_BOUND_ENVELOPE: f64 = 3.0;

/// `L(1, chi_d) |d|^eps` for every fundamental `|d| <= dmax`, with the
/// minimum as the empirical envelope.
pub fn siegel_scan(eps: f64, dmax: u64) -> Result<ScanReport> {
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::InvalidArgument(format!("eps must lie in (0, 0.5], got {eps}")));
    }
    let mut report = ScanReport::new(ScanKind::Siegel, "d", &["l1", "weighted"])
        .with_param("eps", eps)
        .with_param("dmax", dmax);
    let values: Vec<(i64, f64)> = enumerate_fundamental(dmax)
        .par_iter()
        .map(|&d| (d.get(), l_at_one(&QuadraticCharacter::primitive(d))))
        .collect();
    for (d, l1) in values {
        report.pass &= l1 > 0.0;
        report.push_row(d.to_string(), vec![l1, l1 * (d.unsigned_abs() as f64).powf(eps)]);
    }
    report.compute_extrema("weighted");
    Ok(report)
}

/// Signs of `L(sigma, chi_d)` on `grid + 1` equally spaced points of
/// `[lo, hi]`. A sign change brackets a real zero; the absence of one says
/// nothing about zeros between grid points.
pub fn real_zero_scan(
    d: FundamentalDiscriminant,
    lo: f64,
    hi: f64,
    grid: usize,
    policy: &EvalPolicy,
) -> Result<ScanReport> {
    if !(0.0 < lo && lo < hi && hi < 1.0) {
        return Err(Error::InvalidArgument(format!("need 0 < lo < hi < 1, got [{lo}, {hi}]")));
    }
    if grid < 10 {
        return Err(Error::InvalidArgument(format!("grid must be at least 10, got {grid}")));
    }
    let chi = QuadraticCharacter::primitive(d);
    let sigmas: Vec<f64> = (0..=grid)
        .map(|i| lo + (hi - lo) * i as f64 / grid as f64)
        .collect();
    let values = sigmas
        .par_iter()
        .map(|&s| dirichlet_l(ComplexPoint::real(s), &chi, policy).map(|v| v.re))
        .collect::<Result<Vec<_>>>()?;
    let mut report = ScanReport::new(ScanKind::RealZeros, "sigma", &["l_value", "sign_change"])
        .with_param("d", d)
        .with_param("lo", lo)
        .with_param("hi", hi)
        .with_param("grid", grid);
    let mut changes = 0usize;
    for (i, (&s, &v)) in sigmas.iter().zip(&values).enumerate() {
        let change = i > 0 && (values[i - 1] > 0.0) != (v > 0.0);
        changes += change as usize;
        report.push_row(format!("{s}"), vec![v, change as u8 as f64]);
    }
    report.pass = changes == 0;
    report.set_param("sign_changes", changes);
    report.set_param(
        "verdict",
        if changes == 0 {
            "no sign change on grid"
        } else {
            "sign change on grid"
        },
    );
    report.compute_extrema("l_value");
    Ok(report)
}

/// `f(beta) = zeta(beta) L(beta, chi_1) L(beta, chi_2) L(beta, chi_1 chi_2)`.
pub fn f_beta_sign(pair: &CharacterPair, beta: f64, policy: &EvalPolicy) -> Result<f64> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::InvalidArgument(format!("beta must lie in (0, 1), got {beta}")));
    }
    let s = ComplexPoint::real(beta);
    let factors = [
        ("zeta(beta)", riemann_zeta(s, policy)?.re),
        ("L(beta, chi_1)", dirichlet_l(s, pair.chi1(), policy)?.re),
        ("L(beta, chi_2)", dirichlet_l(s, pair.chi2(), policy)?.re),
        ("L(beta, chi_1 chi_2)", dirichlet_l(s, pair.product(), policy)?.re),
    ];
    for (what, value) in factors {
        if value.abs() < NEAR_ZERO {
            return Err(Error::NearZero { what, value });
        }
    }
    Ok(factors.iter().map(|f| f.1).product())
}

/// `f(beta)` over pairs and points, passing when every value is negative.
pub fn f_beta_scan(pairs: &[CharacterPair], betas: &[f64], policy: &EvalPolicy) -> Result<ScanReport> {
    let mut report = ScanReport::new(ScanKind::FBeta, "pair_beta", &["f_beta"]);
    let jobs: Vec<(CharacterPair, f64)> = pairs
        .iter()
        .flat_map(|p| betas.iter().map(move |&b| (*p, b)))
        .collect();
    let values = jobs
        .par_iter()
        .map(|(p, b)| f_beta_sign(p, *b, policy))
        .collect::<Result<Vec<_>>>()?;
    for ((p, b), v) in jobs.iter().zip(values) {
        report.pass &= v < 0.0;
        report.push_row(format!("{}:{}:{b}", p.d1(), p.d2()), vec![v]);
    }
    report.compute_extrema("f_beta");
    Ok(report)
}

/// `L(1, chi_d) / log |d|` for fundamental `3 <= |d| <= dmax`.
pub fn l1_log_bound_scan(dmax: u64) -> Result<ScanReport> {
    let mut report = ScanReport::new(ScanKind::LogBound, "d", &["l1", "ratio"])
        .with_param("dmax", dmax)
        .with_param("envelope", LOG_BOUND_ENVELOPE);
    let values: Vec<(i64, f64)> = enumerate_fundamental(dmax)
        .par_iter()
        .map(|&d| (d.get(), l_at_one(&QuadraticCharacter::primitive(d))))
        .collect();
    for (d, l1) in values {
        let ratio = l1 / (d.unsigned_abs() as f64).ln();
        report.pass &= ratio <= LOG_BOUND_ENVELOPE;
        report.push_row(d.to_string(), vec![l1, ratio]);
    }
    report.compute_extrema("ratio");
    Ok(report)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient by trial division.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Validated `(x, q, a)` for `pi(x; q, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeCountQuery {
    x: u64,
    q: u64,
    a: u64,
}

impl PrimeCountQuery {
    pub fn new(x: u64, q: u64, a: u64) -> Result<Self> {
        if x < 2 {
            return Err(Error::InvalidArgument(format!("x must be at least 2, got {x}")));
        }
        if q < 3 {
            return Err(Error::InvalidArgument(format!("modulus must be at least 3, got {q}")));
        }
        if gcd(a, q) != 1 {
            return Err(Error::NotCoprime { a, q });
        }
        Ok(Self { x, q, a: a % q })
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn a(&self) -> u64 {
        self.a
    }
}

/// Number of primes `p <= x` with `p = a (mod q)`.
pub fn prime_count_ap(query: &PrimeCountQuery) -> u64 {
    let mut count = 0;
    for_each_prime(query.x, |p| count += (p % query.q == query.a) as u64);
    count
}

/// `li(x) = int_2^x du / log u`, by Simpson's rule after `u = e^v`, with the
/// panel count doubled until two estimates agree to `1e-6`.
pub fn li(x: f64) -> f64 {
    if x <= 2.0 {
        return 0.0;
    }
    let (a, b) = (2f64.ln(), x.ln());
    let g = |v: f64| v.exp() / v;
    let simpson = |n: usize| {
        let h = (b - a) / n as f64;
        let mut s = g(a) + g(b);
        for i in 1..n {
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * g(a + h * i as f64);
        }
        s * h / 3.0
    };
    let mut n = 64;
    let mut prev = simpson(n);
    loop {
        n *= 2;
        let next = simpson(n);
        if (next - prev).abs() < 1e-6 || n >= 1 << 24 {
            // Richardson step for the h^4 error term
            return next + (next - prev) / 15.0;
        }
        prev = next;
    }
}

/// Tolerance `x / log^2 x` for the prime-count check.
pub fn sw_tolerance(x: u64) -> f64 {
    let xf = x as f64;
    xf / xf.ln().powi(2)
}

/// `|pi(x; q, a) - li(x) / phi(q)|` for `3 <= q <= qmax` and every reduced
/// residue `a`. Also checks that the progressions partition the primes not
/// dividing `q`.
pub fn siegel_walfisz_check(x: u64, qmax: u64) -> Result<ScanReport> {
    if x < 100 {
        return Err(Error::InvalidArgument(format!("x must be at least 100, got {x}")));
    }
    let li_x = li(x as f64);
    let tol = sw_tolerance(x);
    let mods: Vec<u64> = (3..=qmax).collect();
    let mut counts: Vec<Vec<u64>> = mods.iter().map(|&q| vec![0; q as usize]).collect();
    let mut pi_x = 0u64;
    for_each_prime(x, |p| {
        pi_x += 1;
        for (q, c) in mods.iter().zip(counts.iter_mut()) {
            c[(p % q) as usize] += 1;
        }
    });

    let mut report = ScanReport::new(ScanKind::SiegelWalfisz, "q:a", &["count", "expected", "error"])
        .with_param("x", x)
        .with_param("qmax", qmax)
        .with_param("li_x", li_x)
        .with_param("pi_x", pi_x)
        .with_param("tolerance", tol);
    let mut partition_ok = true;
    let mut max_err = 0.0f64;
    for (&q, c) in mods.iter().zip(&counts) {
        let phi = euler_phi(q);
        let expected = li_x / phi as f64;
        let mut coprime_total = 0;
        for a in (1..q).filter(|&a| gcd(a, q) == 1) {
            let n = c[a as usize];
            coprime_total += n;
            let err = (n as f64 - expected).abs();
            max_err = max_err.max(err);
            report.push_row(format!("{q}:{a}"), vec![n as f64, expected, err]);
        }
        let dividing = (2..=q.min(x)).filter(|&p| q % p == 0 && is_prime(p)).count() as u64;
        partition_ok &= coprime_total + dividing == pi_x;
    }
    report.set_param("partition", if partition_ok { "exact" } else { "broken" });
    report.pass = partition_ok && max_err <= tol;
    report.compute_extrema("error");
    Ok(report)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
