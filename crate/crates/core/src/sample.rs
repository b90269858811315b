//! Random elements for property checks and the suite runner. All draws go
//! through a caller-supplied generator so runs are reproducible from a seed.

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::{Coeff, PosRational, QmodZ, Ring, SqrtRat};
use crate::bc::{BcElem, BcKey};
use crate::char_p::{CpElem, CpKey, PAdicFrac, TpElem};
use crate::group_ring::GroupRingElem;

/// A coefficient: a small integer over `Z`, a small fraction over `Q`, a
/// uniform element of a finite field, or a short root combination.
pub fn coeff<R: Rng + ?Sized>(rng: &mut R, ring: &Ring) -> Coeff {
    match ring {
        Ring::Integers => ring.from_i64(rng.gen_range(-5..=5)),
        Ring::Rationals => {
            let q = BigRational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=4).into());
            ring.from_rational(&q).expect("rational")
        }
        Ring::PrimeField(_) | Ring::ExtField(_) => {
            let all = ring.finite_elements().expect("finite field");
            all.choose(rng).expect("nonempty").clone()
        }
        Ring::SqrtRationals => {
            let mut s = SqrtRat::zero();
            for _ in 0..rng.gen_range(1..=2) {
                let root = SqrtRat::sqrt_of(&BigUint::from(rng.gen_range(1u32..=6)));
                let q = BigRational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into());
                s = s.add(&root.scale(&q));
            }
            Coeff::Sqrt(s)
        }
    }
}

/// A nonzero coefficient.
pub fn nonzero_coeff<R: Rng + ?Sized>(rng: &mut R, ring: &Ring) -> Coeff {
    loop {
        let c = coeff(rng, ring);
        if !ring.is_zero(&c) {
            return c;
        }
    }
}

/// A label with denominator at most `max_den`.
pub fn qmodz<R: Rng + ?Sized>(rng: &mut R, max_den: u64) -> QmodZ {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(0..den);
    QmodZ::new(num, den).expect("positive")
}

pub fn group_ring<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, max_terms: usize, max_den: u64) -> GroupRingElem {
    let n = rng.gen_range(0..=max_terms);
    GroupRingElem::from_terms(
        ring,
        (0..n).map(|_| (qmodz(rng, max_den), coeff(rng, ring))).collect::<Vec<_>>(),
    )
}

/// A label whose denominator divides `p^max_level`.
pub fn p_power_label<R: Rng + ?Sized>(rng: &mut R, p: u64, max_level: u32) -> QmodZ {
    let level = rng.gen_range(0..=max_level);
    let den = p.pow(level);
    QmodZ::new(rng.gen_range(0..den), den).expect("positive")
}

pub fn p_power_group_ring<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, p: u64, max_level: u32, max_terms: usize) -> GroupRingElem {
    let n = rng.gen_range(0..=max_terms);
    GroupRingElem::from_terms(
        ring,
        (0..n)
            .map(|_| (p_power_label(rng, p, max_level), coeff(rng, ring)))
            .collect::<Vec<_>>(),
    )
}

/// A reduced degree `a/b` with `a, b ≤ max_deg`.
pub fn degree<R: Rng + ?Sized>(rng: &mut R, max_deg: u32) -> PosRational {
    PosRational::new(rng.gen_range(1..=max_deg), rng.gen_range(1..=max_deg)).expect("positive")
}

pub fn bc_key<R: Rng + ?Sized>(rng: &mut R, max_deg: u32, max_den: u64) -> BcKey {
    BcKey::new(qmodz(rng, max_den), degree(rng, max_deg))
}

/// `c·μ̃_a e(r) μ*_b` with a nonzero coefficient.
pub fn bc_monomial<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, max_deg: u32, max_den: u64) -> BcElem {
    let key = bc_key(rng, max_deg, max_den);
    BcElem::from_terms(ring, [(key, nonzero_coeff(rng, ring))])
}

pub fn bc<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, max_terms: usize, max_deg: u32, max_den: u64) -> BcElem {
    let n = rng.gen_range(0..=max_terms);
    BcElem::from_terms(
        ring,
        (0..n)
            .map(|_| (bc_key(rng, max_deg, max_den), coeff(rng, ring)))
            .collect::<Vec<_>>(),
    )
}

pub fn padic<R: Rng + ?Sized>(rng: &mut R, p: u64, max_level: u32) -> PAdicFrac {
    let level = rng.gen_range(0..=max_level);
    let k = rng.gen_range(0..p.pow(level));
    PAdicFrac::new(k, p, level).expect("below one")
}

pub fn tp<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, p: u64, max_level: u32, max_terms: usize) -> TpElem {
    let n = rng.gen_range(0..=max_terms);
    TpElem::from_terms(
        ring,
        p,
        (0..n)
            .map(|_| (padic(rng, p, max_level), coeff(rng, ring)))
            .collect::<Vec<_>>(),
    )
    .expect("characteristic p")
}

/// An element supported on `[1/p, 1)`, the kernel of `σ_p`.
pub fn ker_sigma<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, p: u64, max_level: u32, max_terms: usize) -> TpElem {
    let n = rng.gen_range(1..=max_terms);
    let mut terms = Vec::new();
    while terms.len() < n {
        let a = padic(rng, p, max_level.max(1));
        if !a.below_inverse_p(p) {
            terms.push((a, coeff(rng, ring)));
        }
    }
    TpElem::from_terms(ring, p, terms).expect("characteristic p")
}

pub fn cp<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, p: u64, max_k: i64, max_level: u32, max_terms: usize) -> CpElem {
    let n = rng.gen_range(0..=max_terms);
    CpElem::from_terms(
        ring,
        p,
        (0..n)
            .map(|_| {
                let key = CpKey::new(rng.gen_range(-max_k..=max_k), padic(rng, p, max_level));
                (key, coeff(rng, ring))
            })
            .collect::<Vec<_>>(),
    )
    .expect("characteristic p")
}

pub fn nonzero_cp<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, p: u64, max_k: i64, max_level: u32, max_terms: usize) -> CpElem {
    loop {
        let x = cp(rng, ring, p, max_k, max_level, max_terms);
        if !x.is_zero() {
            return x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn draws_respect_bounds() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            assert!(qmodz(&mut rng, 24).den() <= &BigUint::from(24u32));
            let k = ker_sigma(&mut rng, &Ring::PrimeField(3), 3, 3, 4);
            assert!(k.in_ker_sigma());
            let x = bc(&mut rng, &Ring::Integers, 4, 12, 24);
            assert!(x.terms().all(|(k, _)| k.deg.numer() <= &BigUint::from(12u32)));
        }
        let f9: Ring = "fq:3,2".parse().unwrap();
        let _ = coeff(&mut rng, &f9);
    }
}
