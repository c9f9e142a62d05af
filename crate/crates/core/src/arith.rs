//! Small integer helpers: gcd, modular inverse, primality and p-parts.

use crate::error::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least positive `m` with `m * n ≡ 1 (mod modulus)`, by extended Euclid.
///
/// For `modulus = 1` every integer qualifies and the answer is 1.
pub fn mod_inverse(n: usize, modulus: usize) -> Result<usize> {
    if modulus == 0 || gcd(n, modulus) != 1 {
        return Err(Error::NotCoprime { a: n, b: modulus });
    }
    if modulus == 1 {
        return Ok(1);
    }
    let (mut old_r, mut r) = ((n % modulus) as i128, modulus as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    let m = old_s.rem_euclid(modulus as i128) as usize;
    Ok(if m == 0 { modulus } else { m })
}

pub fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    assert!(p >= 2 && n >= 1);
    let mut part = 1;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        part *= p;
    }
    part
}
