use num_bigint::{BigInt, BigUint};

use crate::arith::numtheory::{mod_inverse, split_prime_power};
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;

/// Kills the `p`-part of every label: `e(r) ↦ e(r')` where `r = r_p + r'`
/// and `den(r')` is prime to `p`.
pub fn reduce_mod_p(x: &GroupRingElem, p: u64) -> GroupRingElem {
    x.map_labels(|r| r.p_decompose(p).1)
}

/// The partial inverse of `σ_n` on the reduced algebra. Writing
/// `n = p^k·m` with `p ∤ m`, the `p^k` part acts by `e(r') ↦ e(p^{-k}r')`
/// and the rest by the usual `ρ_m`. The input is reduced first.
pub fn reduced_rho(n: u64, x: &GroupRingElem, p: u64) -> Result<GroupRingElem> {
    if n == 0 {
        return Err(Error::invalid("reduced rho needs n >= 1"));
    }
    let (k, m) = split_prime_power(&BigUint::from(n), p);
    let pk = BigInt::from(num_traits::pow(BigUint::from(p), k as usize));
    let reduced = reduce_mod_p(x, p);
    let divided = reduced.map_labels(|r| {
        let inv = mod_inverse(&pk, r.den()).expect("denominator prime to p");
        r.scale(&inv)
    });
    let m = u64::try_from(m).expect("fits: divides n");
    divided.rho(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{QmodZ, Ring};

    fn e(ring: &Ring, n: i64, d: i64) -> GroupRingElem {
        GroupRingElem::e(ring, QmodZ::of(n, d))
    }

    #[test]
    fn reduction_examples() {
        let f3 = Ring::PrimeField(3);
        assert_eq!(reduce_mod_p(&e(&f3, 1, 6), 3), e(&f3, 1, 2));
        let f2 = Ring::PrimeField(2);
        assert_eq!(reduce_mod_p(&e(&f2, 1, 4), 2), GroupRingElem::one(&f2));
        let back = reduced_rho(3, &e(&f3, 1, 5), 3).unwrap();
        assert_eq!(back, e(&f3, 2, 5));
        assert_eq!(back.sigma(3u32), e(&f3, 1, 5));
    }

    #[test]
    fn mixed_multiplier() {
        let f2 = Ring::PrimeField(2);
        // n = 6 = 2·3 over F_2: undo σ_2 exactly, then ρ_3
        let x = e(&f2, 1, 7);
        let y = reduced_rho(6, &x, 2).unwrap();
        assert_eq!(y.sigma(6u32), x);
    }
}
