use num_complex::Complex64;

use siegel_core::characters::enumerate_fundamental;
use siegel_core::explorer::{f_beta_sign, li, real_zero_scan, siegel_scan};
use siegel_core::fproduct::{coefficients, f_eval, lambda, CharacterPair};
use siegel_core::lfuncs::{dirichlet_l, l_at_one_truncated, ComplexPoint, EvalPolicy};
use siegel_core::perron::{decomposition_record, f_growth_check, QuadratureSpec};
use siegel_core::report::Render;

fn pair() -> CharacterPair {
    CharacterPair::from_discriminants(-3, -4).unwrap()
}

#[test]
fn series_and_product_agree_at_two() {
    let t = coefficients(&pair(), 100_000).unwrap();
    let series = t.partial_series(Complex64::new(2.0, 0.0)).re;
    let product = f_eval(ComplexPoint::real(2.0), &pair(), &EvalPolicy::default()).unwrap().re;
    assert!((series - product).abs() < 1e-4);
    assert!(product >= 1.0);
}

#[test]
fn lambda_third_factor_closed_form() {
    let l12 = (2.0 + 3f64.sqrt()).ln() / 3f64.sqrt();
    let expect = std::f64::consts::PI / (3.0 * 3f64.sqrt()) * std::f64::consts::PI / 4.0 * l12;
    assert!((lambda(&pair()) - expect).abs() < 1e-12);
    let swapped = CharacterPair::from_discriminants(-4, -3).unwrap();
    assert!((lambda(&swapped) - lambda(&pair())).abs() < 1e-15);
}

#[test]
fn frozen_baselines() {
    let pol = EvalPolicy::default();
    let f_half = f_beta_sign(&pair(), 0.5, &pol).unwrap();
    assert!((f_half + 0.2337622689138370).abs() < 1e-12);
    let g = f_growth_check(&pair(), &[0.0], &[10.0], &pol).unwrap();
    assert!((g.rows[0].values[1] - 0.0187175989336).abs() < 1e-9);
    assert!((li(100.0) - 29.0809778039621).abs() < 1e-6);
}

#[test]
fn truncated_l_at_one_error_scale() {
    // measured constant C in |S_T - L(1)| <= C q / T
    let pol = EvalPolicy::default();
    let mut worst = 0.0f64;
    for d in enumerate_fundamental(50) {
        let chi = siegel_core::characters::QuadraticCharacter::primitive(d);
        let exact = dirichlet_l(ComplexPoint::real(1.0), &chi, &pol).unwrap().re;
        for t in [10, 100, 1000, 10_000] {
            let (v, bound) = l_at_one_truncated(&chi, t).unwrap();
            worst = worst.max((v - exact).abs() / bound);
        }
    }
    assert!(worst <= 1.0, "C = {worst}");
}

#[test]
fn no_sign_changes_up_to_500() {
    let pol = EvalPolicy::default();
    let flagged: Vec<i64> = enumerate_fundamental(500)
        .into_iter()
        .filter(|&d| !real_zero_scan(d, 0.05, 0.95, 400, &pol).unwrap().pass)
        .map(|d| d.get())
        .collect();
    assert!(flagged.is_empty(), "sign change on grid for {flagged:?}");
}

#[test]
fn decomposition_record_round_trip() {
    let t = coefficients(&pair(), 120).unwrap();
    let rec = decomposition_record(&t, 120.0, 0.3, &QuadratureSpec::default(), &EvalPolicy::default()).unwrap();
    assert!(rec.abs_error < 1e-5);
    assert!((rec.quadrature - rec.oracle).abs() < 1e-5);
    assert_eq!(rec.to_json(), rec.clone().to_json());
}

#[test]
fn siegel_scan_reproducible() {
    let a = siegel_scan(0.25, 2000).unwrap();
    let b = siegel_scan(0.25, 2000).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.pass);
}
