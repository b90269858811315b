//! Integer helpers: primality, modular inverses, p-adic valuations and
//! square-free parts. Inputs are desk-scale, so trial division is enough.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Inverse of `a` modulo `m`, if it exists. `m == 1` yields `Some(0)`.
pub fn mod_inverse(a: &BigInt, m: &BigUint) -> Option<BigUint> {
    if m.is_zero() {
        return None;
    }
    let m = BigInt::from(m.clone());
    let a = a.mod_floor(&m);
    let eg = a.extended_gcd(&m);
    if !eg.gcd.is_one() {
        return if m.is_one() { Some(BigUint::zero()) } else { None };
    }
    eg.x.mod_floor(&m).to_biguint()
}

/// Splits `n = p^e * rest` with `p ∤ rest`. `n` must be nonzero.
pub fn split_prime_power(n: &BigUint, p: u64) -> (u32, BigUint) {
    debug_assert!(!n.is_zero());
    let p = BigUint::from(p);
    let mut rest = n.clone();
    let mut e = 0u32;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        rest = q;
        e += 1;
    }
    (e, rest)
}

/// `Some(e)` when `n = p^e`.
pub fn prime_power_exponent(n: &BigUint, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let (e, rest) = split_prime_power(n, p);
    rest.is_one().then_some(e)
}

/// Writes `n = c^2 * s` with `s` square-free.
pub fn square_free_decompose(n: &BigUint) -> (BigUint, BigUint) {
    let mut rest = n.clone();
    let mut square_root = BigUint::one();
    let mut square_free = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut count = 0u32;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            count += 1;
        }
        for _ in 0..count / 2 {
            square_root *= &d;
        }
        if count % 2 == 1 {
            square_free *= &d;
        }
        d += 1u32;
    }
    square_free *= rest;
    (square_root, square_free)
}

pub fn pow_u64(base: u64, exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Converts a count that must be materialized term by term.
pub(crate) fn materializable(n: &BigUint) -> u64 {
    n.to_u64()
        .expect("multiplier too large to enumerate its preimages")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(1));
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
    }

    #[test]
    fn inverse() {
        let m = BigUint::from(5u32);
        assert_eq!(mod_inverse(&BigInt::from(3), &m), Some(BigUint::from(2u32)));
        assert_eq!(mod_inverse(&BigInt::from(-3), &m), Some(BigUint::from(3u32)));
        assert_eq!(mod_inverse(&BigInt::from(10), &m), None);
        assert_eq!(
            mod_inverse(&BigInt::from(4), &BigUint::one()),
            Some(BigUint::zero())
        );
    }

    #[test]
    fn square_free() {
        for n in 1u32..200 {
            let (c, s) = square_free_decompose(&BigUint::from(n));
            assert_eq!(&c * &c * &s, BigUint::from(n));
            for d in 2u32..15 {
                assert!(!(&s % BigUint::from(d * d)).is_zero(), "{n}");
            }
        }
        let (c, s) = square_free_decompose(&BigUint::from(72u32));
        assert_eq!((c, s), (BigUint::from(6u32), BigUint::from(2u32)));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_exponent(&BigUint::from(27u32), 3), Some(3));
        assert_eq!(prime_power_exponent(&BigUint::from(1u32), 3), Some(0));
        assert_eq!(prime_power_exponent(&BigUint::from(12u32), 3), None);
        assert_eq!(
            split_prime_power(&BigUint::from(24u32), 2),
            (3, BigUint::from(3u32))
        );
    }
}
