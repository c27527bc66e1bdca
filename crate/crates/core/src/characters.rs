//! Primitive quadratic Dirichlet characters.
//!
//! Every primitive real character of modulus `q > 1` is the Kronecker symbol
//! `(d/.)` of a fundamental discriminant `d` with `|d| = q`. Product
//! characters `chi_1 chi_2` are kept literally, modulo `|d_1 d_2|`, even when
//! they are imprimitive.

use std::fmt;

use crate::error::{Error, Result};

/// `(a/2)` indexed by `a mod 8`.
const TWO_TABLE: [i8; 8] = [0, 1, 0, -1, 0, -1, 0, 1];

fn is_squarefree(mut m: u64) -> bool {
    if m % 4 == 0 {
        return false;
    }
    if m % 2 == 0 {
        m /= 2;
    }
    let mut p = 3u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        p += 2;
    }
    true
}

/// Returns whether `d` is a fundamental discriminant other than 1.
pub fn is_fundamental(d: i64) -> Result<bool> {
    if d == 0 {
        return Err(Error::ZeroDiscriminant);
    }
    if d == 1 {
        return Ok(false);
    }
    Ok(match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    })
}

/// General Kronecker symbol `(a/n)` for `n >= 0`.
pub(crate) fn kronecker_symbol(a: i64, n: u64) -> i8 {
    if n == 0 {
        return if a.unsigned_abs() == 1 { 1 } else { 0 };
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let v = n.trailing_zeros();
    let mut b = n >> v;
    let mut k: i8 = if v % 2 == 0 {
        1
    } else {
        TWO_TABLE[a.rem_euclid(8) as usize]
    };
    // b is odd and positive: Jacobi symbol (a/b)
    let mut a = a.rem_euclid(b as i64) as u64;
    while a != 0 {
        let v = a.trailing_zeros();
        a >>= v;
        if v % 2 == 1 {
            k *= TWO_TABLE[(b & 7) as usize];
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a;
        a = b % r;
        b = r;
    }
    if b == 1 {
        k
    } else {
        0
    }
}

/// Kronecker symbol `(d/n)` restricted to fundamental `d`.
pub fn kronecker(d: i64, n: u64) -> Result<i8> {
    if !is_fundamental(d)? {
        return Err(Error::NotFundamental(d));
    }
    Ok(kronecker_symbol(d, n))
}

/// A fundamental discriminant `d != 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundamentalDiscriminant(i64);

impl FundamentalDiscriminant {
    pub fn new(d: i64) -> Result<Self> {
        if is_fundamental(d)? {
            Ok(Self(d))
        } else {
            Err(Error::NotFundamental(d))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }

    pub fn modulus(self) -> u64 {
        self.0.unsigned_abs()
    }
}

impl fmt::Display for FundamentalDiscriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// All fundamental discriminants with `0 < |d| <= limit`, ordered by `|d|`
/// with the negative one first.
pub fn enumerate_fundamental(limit: u64) -> Vec<FundamentalDiscriminant> {
    let limit = limit.min(i64::MAX as u64) as i64;
    let mut out = Vec::new();
    for m in 2..=limit {
        for d in [-m, m] {
            if let Ok(true) = is_fundamental(d) {
                out.push(FundamentalDiscriminant(d));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterKind {
    Primitive(FundamentalDiscriminant),
    /// `chi_{d1} chi_{d2}` taken modulo `|d1 d2|`.
    Product(FundamentalDiscriminant, FundamentalDiscriminant),
}

/// A real Dirichlet character built from Kronecker symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticCharacter {
    kind: CharacterKind,
    modulus: u64,
}

impl QuadraticCharacter {
    pub fn primitive(d: FundamentalDiscriminant) -> Self {
        Self {
            kind: CharacterKind::Primitive(d),
            modulus: d.modulus(),
        }
    }

    /// Convenience constructor from a raw discriminant.
    pub fn from_discriminant(d: i64) -> Result<Self> {
        FundamentalDiscriminant::new(d).map(Self::primitive)
    }

    /// The product character; `d1 == d2` would give a principal character
    /// and is rejected.
    pub fn product(d1: FundamentalDiscriminant, d2: FundamentalDiscriminant) -> Result<Self> {
        if d1 == d2 {
            return Err(Error::EqualDiscriminants(d1.get()));
        }
        Ok(Self {
            kind: CharacterKind::Product(d1, d2),
            modulus: d1.modulus() * d2.modulus(),
        })
    }

    pub fn kind(&self) -> CharacterKind {
        self.kind
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `chi(n)` for `n >= 0`.
    pub fn value(&self, n: u64) -> i8 {
        match self.kind {
            CharacterKind::Primitive(d) => kronecker_symbol(d.get(), n),
            CharacterKind::Product(d1, d2) => {
                kronecker_symbol(d1.get(), n) * kronecker_symbol(d2.get(), n)
            }
        }
    }

    /// `chi(-1)`: +1 for even characters, -1 for odd ones.
    pub fn parity(&self) -> i8 {
        match self.kind {
            CharacterKind::Primitive(d) => d.get().signum() as i8,
            CharacterKind::Product(d1, d2) => (d1.get().signum() * d2.get().signum()) as i8,
        }
    }

    /// Values `chi(1), ..., chi(q)` over one period.
    pub fn period_values(&self) -> Vec<i8> {
        (1..=self.modulus).map(|n| self.value(n)).collect()
    }

    /// Values `chi(0), ..., chi(nmax)`, filled from one period.
    pub fn values_up_to(&self, nmax: usize) -> Vec<i8> {
        let q = self.modulus as usize;
        let period: Vec<i8> = (0..q.min(nmax + 1)).map(|n| self.value(n as u64)).collect();
        (0..=nmax).map(|n| period[n % q]).collect()
    }
}

impl fmt::Display for QuadraticCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CharacterKind::Primitive(d) => write!(f, "chi_{d}"),
            CharacterKind::Product(d1, d2) => write!(f, "chi_{d1}*chi_{d2}"),
        }
    }
}

/// Free-function form of [`QuadraticCharacter::value`].
pub fn char_value(chi: &QuadraticCharacter, n: u64) -> i8 {
    chi.value(n)
}
