//! Small integer utilities shared across the crate: deterministic primality
//! for desk-scale inputs, trial-division factoring, modular arithmetic, and
//! exact q-th-power detection on big integers (Newton root, then re-raise).

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Deterministic primality by trial division; intended for n well below 2^40.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization (p, multiplicity) by trial division, ascending.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        push(d, &mut n);
        d += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// (g, s) with g = gcd(a, m) and s*a = g mod m.
fn xgcd_mod(a: i128, m: i128) -> (i128, i128) {
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0, s0)
}

/// Inverse of a mod m when gcd(a, m) = 1.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, s) = xgcd_mod(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(s.rem_euclid(m as i128) as u64)
}

pub fn mod_pow_u64(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Multiplicative order of a mod m (m prime, a nonzero mod m).
pub fn mult_order(a: u64, m: u64) -> u64 {
    let mut ord = 1u64;
    let mut x = a % m;
    while x != 1 {
        x = (x as u128 * a as u128 % m as u128) as u64;
        ord += 1;
    }
    ord
}

/// Smallest primitive root modulo the prime r.
pub fn smallest_primitive_root(r: u64) -> u64 {
    let fact = factor_u64(r - 1);
    'outer: for g in 2..r {
        for (p, _) in &fact {
            if mod_pow_u64(g, (r - 1) / p, r) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// p-adic valuation of n (n nonzero).
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero is undefined");
    let p = BigInt::from(p);
    let mut v = 0u32;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

/// Exact q-th root: Some(z) iff z^q = n. Negative n allowed for odd q.
pub fn exact_qth_root(n: &BigInt, q: u32) -> Option<BigInt> {
    if n.is_negative() && q.is_multiple_of(2) {
        return None;
    }
    let root = n.nth_root(q);
    if num_traits::pow::pow(root.clone(), q as usize) == *n {
        Some(root)
    } else {
        None
    }
}

/// Primes in [lo, hi], ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime_u64(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = primes_in(2, 50);
        assert_eq!(
            primes,
            alloc::vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        assert!(is_prime_u64(7919));
        assert!(!is_prime_u64(7917));
    }

    #[test]
    fn factoring() {
        assert_eq!(factor_u64(205), alloc::vec![(5, 1), (41, 1)]);
        assert_eq!(factor_u64(16807), alloc::vec![(7, 5)]);
        assert_eq!(factor_u64(1), alloc::vec![]);
    }

    #[test]
    fn inverses_and_orders() {
        assert_eq!(mod_inverse(3, 5), Some(2));
        assert_eq!(mod_inverse(5, 10), None);
        assert_eq!(mult_order(3, 11), 5);
        assert_eq!(smallest_primitive_root(11), 2);
        assert_eq!(smallest_primitive_root(31), 3);
    }

    #[test]
    fn qth_roots_exact_only() {
        assert_eq!(
            exact_qth_root(&BigInt::from(16807), 5),
            Some(BigInt::from(7))
        );
        assert_eq!(exact_qth_root(&BigInt::from(16806), 5), None);
        assert_eq!(
            exact_qth_root(&BigInt::from(-27), 3),
            Some(BigInt::from(-3))
        );
        assert_eq!(exact_qth_root(&BigInt::from(-27), 2), None);
        // one above and one below a large exact power
        let big = BigInt::from(123456789u64);
        let pow = num_traits::pow::pow(big.clone(), 7);
        assert_eq!(exact_qth_root(&pow, 7), Some(big));
        assert_eq!(exact_qth_root(&(pow + 1), 7), None);
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&BigInt::from(55), 5), 1);
        assert_eq!(valuation(&BigInt::from(205), 5), 1);
        assert_eq!(valuation(&BigInt::from(11), 5), 0);
        assert_eq!(valuation(&BigInt::from(250), 5), 3);
    }
}
