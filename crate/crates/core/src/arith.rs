//! Small number-theoretic helpers used throughout the crate.
//!
//! All residue arithmetic in this crate is over `Z_m` with representatives
//! in `0..m`. These helpers centralise the normalisation so the rest of the
//! code can freely mix signed offsets and unsigned residues.

/// Greatest common divisor. `gcd(0, 0) == 0` by convention.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Gcd of `m` and every element of an iterator of residues.
///
/// Starting from `m` means the empty set yields `m`, matching the convention
/// that the subgroup generated by the empty set of differences is trivial.
pub fn gcd_with_all<I: IntoIterator<Item = u64>>(m: u64, values: I) -> u64 {
    values.into_iter().fold(m, gcd)
}

/// Reduce a signed offset into `0..m`.
pub fn modm(x: i64, m: u64) -> u64 {
    debug_assert!(m > 0);
    let m_i = m as i64;
    (((x % m_i) + m_i) % m_i) as u64
}

/// `a + b mod m` for residues already in `0..m`.
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(a < m && b < m);
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

/// `a - b mod m` for residues already in `0..m`.
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(a < m && b < m);
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

/// `a * b mod m`.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    ((a as u128 * b as u128) % m as u128) as u64
}

/// The residue among `{x, m-x}` closer to zero; used to name edge "types".
pub fn min_residue(x: u64, m: u64) -> u64 {
    let x = x % m;
    x.min(m - x).min(x) // m - x with x == 0 would be m; the outer min fixes it
}

/// Multiplicative inverse of `a` mod `m`, if `gcd(a, m) == 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let (mut old_r, mut r) = (a as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(modm(old_s, m))
}

/// Distinct prime factors of `n`, in increasing order.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Number of distinct prime divisors of `n` (0 for `n <= 1`).
pub fn distinct_prime_count(n: u64) -> usize {
    prime_factors(n).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd_with_all(12, [8, 10]), 2);
        assert_eq!(gcd_with_all(12, []), 12);
    }

    #[test]
    fn mod_arithmetic() {
        assert_eq!(modm(-1, 7), 6);
        assert_eq!(modm(14, 7), 0);
        assert_eq!(add_mod(5, 4, 7), 2);
        assert_eq!(sub_mod(2, 5, 7), 4);
        assert_eq!(mul_mod(5, 5, 7), 4);
        assert_eq!(min_residue(5, 7), 2);
        assert_eq!(min_residue(0, 7), 0);
        assert_eq!(min_residue(4, 8), 4);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(1, 1), Some(0));
        for m in 2..40u64 {
            for a in 1..m {
                if gcd(a, m) == 1 {
                    let inv = mod_inverse(a, m).unwrap();
                    assert_eq!(mul_mod(a, inv, m), 1 % m);
                } else {
                    assert_eq!(mod_inverse(a, m), None);
                }
            }
        }
    }

    #[test]
    fn primes() {
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(12), vec![2, 3]);
        assert_eq!(prime_factors(97), vec![97]);
        assert_eq!(distinct_prime_count(60), 3);
        assert_eq!(distinct_prime_count(1), 0);
    }
}
