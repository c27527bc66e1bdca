//! Small special-function kernels shared by the L-function and quadrature
//! code.

use num_complex::Complex64;

/// `B_{2k} / (2k)!` for `k = 1..=20`.
pub(crate) const BERNOULLI_OVER_FACTORIAL: [f64; 20] = [
    0.083333333333333333333,
    -0.0013888888888888888889,
    0.000033068783068783068783,
    -8.2671957671957671958e-7,
    2.0876756987868098979e-8,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.174868698558061873e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
    2.2679524523376830603e-24,
    -5.7447906688722024453e-26,
    1.4551724756148649019e-27,
    -3.6859949406653101782e-29,
    9.336734257095044672e-31,
    -2.3650224157006299346e-32,
];

pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Digamma function for `x > 0`.
pub fn digamma(mut x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut acc = 0.0;
    while x < 10.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    let mut series = 0.0;
    let mut fact = 1.0; // (2k-1)!
    for (k, c) in BERNOULLI_OVER_FACTORIAL.iter().take(8).enumerate() {
        let two_k = 2 * (k + 1);
        if k > 0 {
            fact *= ((two_k - 2) * (two_k - 1)) as f64;
        }
        // B_{2k}/(2k) = c (2k-1)!
        series += c * fact * pow;
        pow *= inv2;
    }
    acc + x.ln() - 0.5 / x - series
}

/// `(e^z - 1) / z`, accurate near `z = 0`.
pub fn exprel(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..30 {
            term = term * z / k as f64;
            sum += term;
            if term.norm() < 1e-17 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (z.exp() - 1.0) / z
    }
}

/// Exponential integral `E_1(z) = int_z^inf e^{-u}/u du`, principal branch,
/// for `z` off the closed negative real axis.
pub fn exp_integral_e1(z: Complex64) -> Complex64 {
    if z.norm() <= 2.0 {
        // -gamma - ln z - sum (-z)^k / (k k!)
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 1..200 {
            term = -term * z / k as f64;
            let add = term / k as f64;
            sum += add;
            if add.norm() < 1e-17 * sum.norm().max(1e-300) {
                break;
            }
        }
        -EULER_GAMMA - z.ln() - sum
    } else {
        // e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...))), modified Lentz
        let tiny = 1e-300;
        let b0 = z + 1.0;
        let mut f = b0;
        let mut c = b0;
        let mut d = Complex64::new(0.0, 0.0);
        for k in 1..2000 {
            let a = -((k * k) as f64);
            let b = z + (2 * k + 1) as f64;
            d = b + a * d;
            if d.norm() < tiny {
                d = Complex64::new(tiny, 0.0);
            }
            c = b + a / c;
            if c.norm() < tiny {
                c = Complex64::new(tiny, 0.0);
            }
            d = d.inv();
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).norm() < 1e-16 {
                break;
            }
        }
        (-z).exp() / f
    }
}
