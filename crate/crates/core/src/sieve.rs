//! Segmented sieve of Eratosthenes.

const SEGMENT: usize = 1 << 16;

fn small_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Calls `visit` on every prime `p <= limit` in increasing order.
pub fn for_each_prime(limit: u64, mut visit: impl FnMut(u64)) {
    if limit < 2 {
        return;
    }
    let base = small_primes(isqrt(limit));
    let mut flags = vec![true; SEGMENT];
    let mut lo = 2u64;
    while lo <= limit {
        let hi = (lo + SEGMENT as u64 - 1).min(limit);
        let len = (hi - lo + 1) as usize;
        flags[..len].fill(true);
        for &p in &base {
            if p * p > hi {
                break;
            }
            let start = (p * p).max(lo.div_ceil(p) * p);
            let mut m = start;
            while m <= hi {
                flags[(m - lo) as usize] = false;
                m += p;
            }
        }
        for (i, &is_prime) in flags[..len].iter().enumerate() {
            if is_prime {
                visit(lo + i as u64);
            }
        }
        lo = hi + 1;
    }
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_prime(limit, |p| out.push(p));
    out
}

/// `pi(x)`.
pub fn prime_pi(limit: u64) -> u64 {
    let mut c = 0;
    for_each_prime(limit, |_| c += 1);
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn matches_trial_division_across_segments() {
        let limit = 3 * SEGMENT as u64 + 17;
        let sieved = primes_up_to(limit);
        let direct: Vec<u64> = (0..=limit).filter(|&n| trial(n)).collect();
        assert_eq!(sieved, direct);
    }

    #[test]
    fn known_counts() {
        assert_eq!(prime_pi(0), 0);
        assert_eq!(prime_pi(2), 1);
        assert_eq!(prime_pi(100), 25);
        assert_eq!(prime_pi(1_000_000), 78498);
    }
}
