//! Small-integer number theory shared by the cyclotomic and Dixon code.

use num_integer::Integer;

/// Prime factorization as `(p, e)` pairs in increasing order of `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
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

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// The units of `Z/n`, in increasing order. For `n = 1` this is `[1]`.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&k| k.gcd(&n) == 1).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(mod_pow(3, 4, 7), 4);
        assert_eq!(mod_inv(3, 7), Some(5));
        assert_eq!(mod_inv(2, 4), None);
        assert_eq!(units(8), vec![1, 3, 5, 7]);
        assert_eq!(units(1), vec![1]);
        assert_eq!(euler_phi(24), 8);
        assert!(is_prime(181) && !is_prime(121));
    }
}
