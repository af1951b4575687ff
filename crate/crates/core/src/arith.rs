//! Integer helpers: primality, factorization and prime-power decomposition.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, ascending primes with multiplicity.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Splits `q = p^m`; fails unless `q` is a prime power greater than 1.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, m)] => Ok((*p, *m)),
        _ => Err(Error::NotPrimePower(q)),
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Largest power of `r` dividing `n`.
pub fn r_part(mut n: u64, r: u64) -> u64 {
    let mut part = 1;
    while n % r == 0 {
        n /= r;
        part *= r;
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(243).unwrap(), (3, 5));
        assert_eq!(prime_power(2).unwrap(), (2, 1));
        assert_eq!(prime_power(6), Err(Error::NotPrimePower(6)));
        assert_eq!(prime_power(1), Err(Error::NotPrimePower(1)));
    }

    #[test]
    fn factors() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(r_part(168, 2), 8);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert!(is_prime(31) && !is_prime(1) && !is_prime(91));
    }
}
