//! Acceptance checks, one PASS/FAIL line per criterion. Runs with its own
//! `main` so the lines always appear in `cargo test` output.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use siegel_core::characters::{enumerate_fundamental, QuadraticCharacter};
use siegel_core::explorer::{f_beta_scan, siegel_scan, siegel_walfisz_check};
use siegel_core::fproduct::{coefficients, dirichlet_coefficients, pairs_within, smallest_pairs, CharacterPair};
use siegel_core::lfuncs::{
    convexity_scan, dirichlet_l, fe_ratio, fe_ratio_scan, l_at_one, riemann_zeta, zeta_growth_scan, ComplexPoint,
    EvalPolicy,
};
use siegel_core::perron::{
    contour_decomposition_from_samples, f_growth_check, floor_samples, j_quadrature_from_samples, j_sum_oracle,
    lower_bound_constants, LineSamples, QuadratureSpec,
};
use siegel_core::report::Render;
use siegel_core::sieve::prime_pi;
use siegel_core::Result;

type Outcome = Result<(bool, String)>;

fn coefficient_nonnegativity() -> Outcome {
    let start = Instant::now();
    let pairs = pairs_within(30);
    let mut bad = Vec::new();
    for p in &pairs {
        let a = dirichlet_coefficients(p, 100_000);
        if a[1] != 1 || a[1..].iter().any(|&v| v < 0) {
            bad.push(format!("({}, {})", p.d1(), p.d2()));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok((
        bad.is_empty() && secs < 60.0,
        format!("{} pairs, n <= 100000, violations {:?}, {secs:.1} s", pairs.len(), bad),
    ))
}

fn a0_floor() -> Outcome {
    let pairs = pairs_within(30);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = f64::INFINITY;
    let mut ok = true;
    for p in &pairs {
        let table = coefficients(p, 100_000)?;
        let samples: Vec<(f64, f64)> = (0..1000)
            .map(|_| {
                let x = 10f64.powf(rng.gen_range(0.0..5.0));
                let w = rng.gen_range(0.0..1.0f64).max(f64::MIN_POSITIVE);
                (x, w)
            })
            .collect();
        let r = floor_samples(&table, &samples)?;
        ok &= r.pass;
        worst = worst.min(r.extrema.map_or(f64::INFINITY, |e| e.min));
    }
    Ok((ok, format!("{} pairs x 1000 samples, min A_0 = {worst}", pairs.len())))
}

fn uniform_positivity() -> Outcome {
    let (c4, x4) = lower_bound_constants(4)?;
    let xs: Vec<f64> = (0..50).map(|i| x4 * (1e4 / x4).powf(i as f64 / 49.0)).collect();
    let mut min_ratio = f64::INFINITY;
    for p in smallest_pairs(20) {
        let table = coefficients(&p, 10_000)?;
        for &x in &xs {
            for k in 1..=9 {
                let j = j_sum_oracle(&table, x, k as f64 / 10.0)?;
                min_ratio = min_ratio.min(j / c4);
            }
        }
    }
    Ok((
        min_ratio >= 1.0,
        format!("c4 = {c4:.6e}, x4 = {x4}, min J / c4 = {min_ratio:.4} over 20 pairs x 50 x x 9 w"),
    ))
}

const XS: [f64; 5] = [2.0, 5.0, 10.0, 50.0, 120.0];
const WS: [f64; 3] = [0.3, 0.5, 0.9];

fn perron_identity(pair: &CharacterPair) -> Outcome {
    let start = Instant::now();
    let pol = EvalPolicy::default();
    let spec = QuadratureSpec::default();
    let table = coefficients(pair, 120)?;
    let mut worst = 0.0f64;
    for w in WS {
        let line = LineSamples::new(pair, spec.line_sigma() + w, &spec, &pol)?;
        for x in XS {
            let q = j_quadrature_from_samples(&line, pair, x, w, &pol)?;
            worst = worst.max((q.value - j_sum_oracle(&table, x, w)?).abs());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok((worst <= 1e-5 && secs < 120.0, format!("max |quadrature - oracle| = {worst:.2e}, {secs:.1} s")))
}

fn contour_shift(pair: &CharacterPair) -> Outcome {
    let pol = EvalPolicy::default();
    let spec = QuadratureSpec::default();
    let table = coefficients(pair, 200)?;
    let critical = LineSamples::new(pair, 0.0, &spec, &pol)?;
    let mut worst = 0.0f64;
    for w in WS {
        for x in XS {
            let d = contour_decomposition_from_samples(&critical, x, w, pair, &pol)?;
            worst = worst.max((d.total - j_sum_oracle(&table, x, w)?).abs());
        }
    }
    let mut decay_ok = true;
    let mut ratios = Vec::new();
    for w in WS {
        let r1 = contour_decomposition_from_samples(&critical, 100.0, w, pair, &pol)?.remainder;
        let r2 = contour_decomposition_from_samples(&critical, 200.0, w, pair, &pol)?.remainder;
        let ratio = r2.abs() / r1.abs();
        decay_ok &= ratio <= 1.2 * 2f64.powf(-w);
        ratios.push(format!("{ratio:.3}<={:.3}", 1.2 * 2f64.powf(-w)));
    }
    Ok((
        worst <= 1e-5 && decay_ok,
        format!("max |total - oracle| = {worst:.2e}; |R(200)/R(100)| {}", ratios.join(", ")),
    ))
}

fn l_value_oracles() -> Outcome {
    let pol = EvalPolicy::default();
    let one = ComplexPoint::real(1.0);
    let chi4 = QuadraticCharacter::from_discriminant(-4)?;
    let chi3 = QuadraticCharacter::from_discriminant(-3)?;
    let e4 = (dirichlet_l(one, &chi4, &pol)?.re - PI / 4.0).abs().max((l_at_one(&chi4) - PI / 4.0).abs());
    let target3 = PI / (3.0 * 3f64.sqrt());
    let e3 = (dirichlet_l(one, &chi3, &pol)?.re - target3).abs().max((l_at_one(&chi3) - target3).abs());
    let ez2 = (riemann_zeta(ComplexPoint::real(2.0), &pol)?.re - PI * PI / 6.0).abs();
    let ez0 = (riemann_zeta(ComplexPoint::real(0.0), &pol)?.re + 0.5).abs();
    Ok((
        e4 <= 1e-8 && e3 <= 1e-8 && ez2 <= 1e-10 && ez0 <= 1e-8,
        format!("errors: L(1,-4) {e4:.1e}, L(1,-3) {e3:.1e}, zeta(2) {ez2:.1e}, zeta(0) {ez0:.1e}"),
    ))
}

fn growth_envelopes() -> Outcome {
    let pol = EvalPolicy::default();
    let chars30: Vec<QuadraticCharacter> = enumerate_fundamental(30).into_iter().map(QuadraticCharacter::primitive).collect();
    let conv = convexity_scan(&chars30, &[0.0, 0.25, 0.5, 1.0], &[10.0, 20.0, 40.0, 80.0], &pol)?;
    let ts: Vec<f64> = (1..=8).map(|k| 10.0 * k as f64).collect();
    let zeta = zeta_growth_scan(&[0.0, 0.5, 1.0], &ts, &pol)?;
    let mut f_max = 0.0f64;
    let mut f_ok = true;
    for p in smallest_pairs(20) {
        let r = f_growth_check(&p, &[-0.25, 0.0, 0.5, 1.0, 2.0], &[5.0, 10.0, 20.0, 50.0, 100.0], &pol)?;
        f_ok &= r.pass;
        f_max = f_max.max(r.extrema.map_or(0.0, |e| e.max));
    }
    let chars20: Vec<QuadraticCharacter> = enumerate_fundamental(20).into_iter().map(QuadraticCharacter::primitive).collect();
    let fe = fe_ratio_scan(&chars20, &[0.0, 0.25, 0.75, 1.0], &[5.0, 10.0, 20.0, 50.0], (0.05, 20.0), &pol)?;
    let fe_range = fe.column("ratio").unwrap_or_default();
    let (fe_lo, fe_hi) = fe_range.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &v| (a.min(v), b.max(v)));
    let mut crit_dev = 0.0f64;
    for chi in &chars20 {
        for t in [5.0, 10.0, 20.0, 50.0] {
            crit_dev = crit_dev.max((fe_ratio(ComplexPoint::new(0.5, t), chi, &pol)? - 1.0).abs());
        }
    }
    let max_of = |r: &siegel_core::report::ScanReport| r.extrema.as_ref().map_or(0.0, |e| e.max);
    Ok((
        conv.pass && zeta.pass && f_ok && fe.pass && crit_dev <= 1e-6,
        format!(
            "max ratios: L {:.3}, zeta {:.3}, f {:.3}; fe_ratio in [{fe_lo:.3}, {fe_hi:.3}]; |fe(1/2) - 1| <= {crit_dev:.1e}",
            max_of(&conv),
            max_of(&zeta),
            f_max
        ),
    ))
}

fn siegel_sanity() -> Outcome {
    let start = Instant::now();
    let a = siegel_scan(0.1, 10_000)?;
    let secs = start.elapsed().as_secs_f64();
    let b = siegel_scan(0.1, 10_000)?;
    let same = a.to_json() == b.to_json() && a.to_csv() == b.to_csv();
    let e = a.extrema.clone().expect("nonempty scan");
    Ok((
        a.pass && secs < 600.0 && same,
        format!(
            "{} discriminants, all L(1) > 0: {}, min L(1)|d|^0.1 = {:.6} at d = {}, {secs:.1} s, reproducible: {same}",
            a.rows.len(),
            a.pass,
            e.min,
            e.argmin
        ),
    ))
}

fn prime_progressions() -> Outcome {
    let r = siegel_walfisz_check(1_000_000, 30)?;
    let pi = prime_pi(1_000_000);
    let max_err = r.extrema.as_ref().map_or(0.0, |e| e.max);
    let ok = r.pass && r.param("partition") == Some("exact") && r.param("pi_x") == Some("78498") && pi == 78498;
    Ok((
        ok,
        format!(
            "max |pi(x;q,a) - li(x)/phi(q)| = {max_err:.1} vs tolerance {}, partition {}, pi(10^6) = {pi}",
            r.param("tolerance").unwrap_or("?"),
            r.param("partition").unwrap_or("?")
        ),
    ))
}

fn f_beta_negative() -> Outcome {
    let pairs = pairs_within(20);
    let r = f_beta_scan(&pairs, &[0.3, 0.5, 0.7, 0.9], &EvalPolicy::default())?;
    let max = r.extrema.as_ref().map_or(0.0, |e| e.max);
    Ok((r.pass, format!("{} pairs x 4 points, max f(beta) = {max:.4e}", pairs.len())))
}

fn main() -> ExitCode {
    let pair = CharacterPair::from_discriminants(-3, -4).expect("valid pair");
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("coefficient nonnegativity", Box::new(coefficient_nonnegativity)),
        ("A_0 floor", Box::new(a0_floor)),
        ("uniform positivity of J at k = 4", Box::new(uniform_positivity)),
        ("Perron identity", Box::new(move || perron_identity(&pair))),
        ("contour-shift identity", Box::new(move || contour_shift(&pair))),
        ("L-value oracles", Box::new(l_value_oracles)),
        ("growth envelopes", Box::new(growth_envelopes)),
        ("Siegel scan sanity", Box::new(siegel_sanity)),
        ("primes in progressions", Box::new(prime_progressions)),
        ("sign of f(beta)", Box::new(f_beta_negative)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = match check() {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        failed += !ok as usize;
        println!("{} criterion {:>2} {name}: {detail}", if ok { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
