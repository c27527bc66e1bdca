//! The product `f(s) = zeta(s) L(s, chi_1) L(s, chi_2) L(s, chi_1 chi_2)`.
//!
//! Its Dirichlet coefficients are the fourfold convolution
//! `1 * chi_1 * chi_2 * chi_1 chi_2`, computed here in exact integer
//! arithmetic. Taking logarithms gives local coefficients
//! `(1/m) [1 + chi_1(p^m)] [1 + chi_2(p^m)] >= 0` at prime powers, which is
//! why every `a_n` is nonnegative.

use num_complex::Complex64;

use crate::characters::{enumerate_fundamental, FundamentalDiscriminant, QuadraticCharacter};
use crate::error::{Error, Result};
use crate::lfuncs::{dirichlet_l, l_at_one, riemann_zeta, ComplexPoint, EvalPolicy};

pub const DEFAULT_NMAX: usize = 100_000;

/// Two distinct primitive quadratic characters and their product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharacterPair {
    d1: FundamentalDiscriminant,
    d2: FundamentalDiscriminant,
    chi1: QuadraticCharacter,
    chi2: QuadraticCharacter,
    product: QuadraticCharacter,
}

impl CharacterPair {
    pub fn new(d1: FundamentalDiscriminant, d2: FundamentalDiscriminant) -> Result<Self> {
        let product = QuadraticCharacter::product(d1, d2)?;
        Ok(Self {
            d1,
            d2,
            chi1: QuadraticCharacter::primitive(d1),
            chi2: QuadraticCharacter::primitive(d2),
            product,
        })
    }

    pub fn from_discriminants(d1: i64, d2: i64) -> Result<Self> {
        Self::new(FundamentalDiscriminant::new(d1)?, FundamentalDiscriminant::new(d2)?)
    }

    pub fn d1(&self) -> FundamentalDiscriminant {
        self.d1
    }

    pub fn d2(&self) -> FundamentalDiscriminant {
        self.d2
    }

    pub fn chi1(&self) -> &QuadraticCharacter {
        &self.chi1
    }

    pub fn chi2(&self) -> &QuadraticCharacter {
        &self.chi2
    }

    pub fn product(&self) -> &QuadraticCharacter {
        &self.product
    }

    /// `q_1 q_2`.
    pub fn conductor_product(&self) -> f64 {
        self.product.modulus() as f64
    }
}

/// Every unordered pair of distinct fundamental discriminants with
/// `|d| <= limit`, in enumeration order.
pub fn pairs_within(limit: u64) -> Vec<CharacterPair> {
    let ds = enumerate_fundamental(limit);
    let mut out = Vec::new();
    for (i, &a) in ds.iter().enumerate() {
        for &b in &ds[i + 1..] {
            out.push(CharacterPair::new(a, b).expect("distinct discriminants"));
        }
    }
    out
}

/// The `count` pairs with the smallest `|d_1 d_2|`, ties broken by
/// enumeration order of `(d_1, d_2)`.
pub fn smallest_pairs(count: usize) -> Vec<CharacterPair> {
    let mut limit = 16u64;
    loop {
        let ds = enumerate_fundamental(limit);
        let mut cands: Vec<(u64, usize, usize)> = Vec::new();
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                cands.push((ds[i].modulus() * ds[j].modulus(), i, j));
            }
        }
        cands.sort();
        // a pair left out has a member beyond `limit`, so product > 3 * limit
        if count == 0 || cands.len() >= count && cands[count - 1].0 <= 3 * limit {
            return cands
                .into_iter()
                .take(count)
                .map(|(_, i, j)| CharacterPair::new(ds[i], ds[j]).expect("distinct"))
                .collect();
        }
        limit *= 2;
    }
}

/// Exact Dirichlet coefficients `a_0 = 0, a_1, ..., a_nmax` of `f`.
pub fn dirichlet_coefficients(pair: &CharacterPair, nmax: usize) -> Vec<i64> {
    let mut a = vec![1i64; nmax + 1];
    a[0] = 0;
    for chi in [pair.chi1, pair.chi2, pair.product] {
        a = convolve_with_character(&a, &chi.values_up_to(nmax));
    }
    a
}

fn convolve_with_character(a: &[i64], chi: &[i8]) -> Vec<i64> {
    let n = a.len() - 1;
    let mut c = vec![0i64; n + 1];
    for d in 1..=n {
        let ad = a[d];
        if ad == 0 {
            continue;
        }
        for m in 1..=n / d {
            match chi[m] {
                0 => {}
                1 => c[d * m] += ad,
                _ => c[d * m] -= ad,
            }
        }
    }
    c
}

/// Smallest prime factor of each `n <= nmax` (0 and 1 map to 0 and 1).
fn smallest_prime_factors(nmax: usize) -> Vec<u32> {
    let mut spf: Vec<u32> = (0..=nmax as u32).collect();
    let mut p = 2;
    while p * p <= nmax {
        if spf[p] == p as u32 {
            for m in (p * p..=nmax).step_by(p) {
                if spf[m] == m as u32 {
                    spf[m] = p as u32;
                }
            }
        }
        p += 1;
    }
    spf
}

/// Immutable coefficient table with `a_1 = 1`, `a_n >= 0`, and
/// multiplicativity checked at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    pair: CharacterPair,
    a: Vec<u64>,
}

impl CoefficientTable {
    pub fn pair(&self) -> &CharacterPair {
        &self.pair
    }

    pub fn nmax(&self) -> usize {
        self.a.len() - 1
    }

    /// `a_n` for `1 <= n <= nmax`.
    pub fn get(&self, n: usize) -> u64 {
        self.a[n]
    }

    pub fn value(&self, n: usize) -> f64 {
        self.a[n] as f64
    }

    /// `(n, a_n)` for `n = 1..=nmax`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.a.iter().copied().enumerate().skip(1)
    }

    /// `sum_{n <= nmax} a_n n^{-s}`.
    pub fn partial_series(&self, s: Complex64) -> Complex64 {
        self.iter()
            .filter(|&(_, v)| v != 0)
            .map(|(n, v)| {
                let l = (n as f64).ln();
                Complex64::from_polar(v as f64 * (-s.re * l).exp(), -s.im * l)
            })
            .sum()
    }
}

/// Builds and validates the coefficient table of `f` up to `nmax`.
pub fn coefficients(pair: &CharacterPair, nmax: usize) -> Result<CoefficientTable> {
    if nmax == 0 {
        return Err(Error::InvalidArgument("nmax must be at least 1".into()));
    }
    let raw = dirichlet_coefficients(pair, nmax);
    if raw[1] != 1 {
        return Err(Error::Invariant {
            n: 1,
            detail: format!("a_1 = {}", raw[1]),
        });
    }
    if let Some(n) = raw.iter().position(|&v| v < 0) {
        return Err(Error::Invariant {
            n,
            detail: format!("a_n = {} < 0", raw[n]),
        });
    }
    let spf = smallest_prime_factors(nmax);
    for n in 2..=nmax {
        let p = spf[n] as usize;
        let (mut m, mut pe) = (n, 1);
        while m % p == 0 {
            m /= p;
            pe *= p;
        }
        if m > 1 && raw[n] != raw[pe] * raw[m] {
            return Err(Error::Invariant {
                n,
                detail: format!("a_n != a_{pe} a_{m}"),
            });
        }
    }
    Ok(CoefficientTable {
        pair: *pair,
        a: raw.into_iter().map(|v| v as u64).collect(),
    })
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `[1 + chi_1(p^m)] [1 + chi_2(p^m)]`, the log coefficient times `m`.
fn log_weight(pair: &CharacterPair, p: u64, m: u32) -> i64 {
    let c1 = (pair.chi1.value(p) as i64).pow(m);
    let c2 = (pair.chi2.value(p) as i64).pow(m);
    (1 + c1) * (1 + c2)
}

/// Coefficient of `p^{-ms}` in `log f(s)`.
pub fn log_coefficient(pair: &CharacterPair, p: u64, m: u32) -> Result<f64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("prime-power exponent must be positive".into()));
    }
    Ok(log_weight(pair, p, m) as f64 / m as f64)
}

/// Coefficients of `exp` of the prime-power log series, by the recursion
/// `Omega(n) a_n = sum_{p^m | n} m b(p^m) a_{n/p^m}` in integers, where
/// `b(p^m)` is [`log_coefficient`]. `Omega` is completely additive, so
/// multiplying coefficients by it is a derivation of Dirichlet convolution.
pub fn coefficients_via_log_series(pair: &CharacterPair, nmax: usize) -> Result<Vec<i64>> {
    let spf = smallest_prime_factors(nmax);
    let mut a = vec![0i64; nmax + 1];
    if nmax >= 1 {
        a[1] = 1;
    }
    for n in 2..=nmax {
        // factor n
        let mut rest = n;
        let mut factors: Vec<(usize, u32)> = Vec::new();
        while rest > 1 {
            let p = spf[rest] as usize;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        let omega: i64 = factors.iter().map(|&(_, e)| e as i64).sum();
        let mut acc = 0i64;
        for &(p, e) in &factors {
            let mut pm = 1;
            for m in 1..=e {
                pm *= p;
                acc += log_weight(pair, p as u64, m) * a[n / pm];
            }
        }
        if acc % omega != 0 {
            return Err(Error::Invariant {
                n,
                detail: format!("{acc} not divisible by Omega(n) = {omega}"),
            });
        }
        a[n] = acc / omega;
    }
    Ok(a)
}

/// `f(s)` as the product of its four factors.
pub fn f_eval(s: ComplexPoint, pair: &CharacterPair, policy: &EvalPolicy) -> Result<Complex64> {
    let z = riemann_zeta(s, policy)?;
    let l1 = dirichlet_l(s, &pair.chi1, policy)?;
    let l2 = dirichlet_l(s, &pair.chi2, policy)?;
    let l12 = dirichlet_l(s, &pair.product, policy)?;
    Ok(z * l1 * l2 * l12)
}

/// Residue of `f` at `s = 1`: `L(1, chi_1) L(1, chi_2) L(1, chi_1 chi_2)`.
pub fn lambda(pair: &CharacterPair) -> f64 {
    l_at_one(&pair.chi1) * l_at_one(&pair.chi2) * l_at_one(&pair.product)
}
