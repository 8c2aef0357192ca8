//! Small integer helpers.

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
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

/// The largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `Some(p)` when `n = p^k` with `k ≥ 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Number of prime factors counted with multiplicity.
pub fn big_omega(n: u64) -> u32 {
    factorize(n).iter().map(|&(_, e)| e).sum()
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power_base(81), Some(3));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(prime_power_base(1), None);
        assert_eq!(big_omega(30), 3);
        assert_eq!(big_omega(18), 3);
        assert_eq!(p_part(24, 2), 8);
        assert!(is_prime(97) && !is_prime(1) && !is_prime(91));
    }
}
