//! The abelian part: the group ring of `Q/Z` over a coefficient ring,
//! with the endomorphisms `σ_n`, the integral transfer maps `ρ̃_n`, their
//! rational normalizations `ρ_n`, the idempotents `π_n`, Galois twists,
//! and the augmentation.

mod cyclotomic;

pub use cyclotomic::CyclotomicPoly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{numtheory::mod_inverse, Coeff, QmodZ, Ring};
use crate::error::{Error, Result};
use crate::sparse;

/// A finite combination `Σ c_r·e(r)`. Terms iterate in `(den, num)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElem {
    ring: Ring,
    terms: BTreeMap<QmodZ, Coeff>,
}

impl GroupRingElem {
    pub fn zero(ring: &Ring) -> Self {
        GroupRingElem {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::e(ring, QmodZ::zero())
    }

    /// The basis element `e(r)`.
    pub fn e(ring: &Ring, r: QmodZ) -> Self {
        Self::monomial(ring, r, ring.one())
    }

    pub fn monomial(ring: &Ring, r: QmodZ, c: Coeff) -> Self {
        Self::from_terms(ring, [(r, c)])
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::monomial(ring, QmodZ::zero(), c)
    }

    /// Sums the given terms; repeated labels are merged.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (QmodZ, Coeff)>) -> Self {
        GroupRingElem {
            ring: ring.clone(),
            terms: sparse::collect(ring, terms),
        }
    }

    pub(crate) fn from_map(ring: &Ring, terms: BTreeMap<QmodZ, Coeff>) -> Self {
        GroupRingElem {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QmodZ, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, r: &QmodZ) -> Coeff {
        self.terms.get(r).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Least common multiple of the term denominators (`1` for zero).
    pub fn level(&self) -> BigUint {
        self.terms
            .keys()
            .fold(BigUint::one(), |acc, r| acc.lcm(r.den()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.expect_same(&other.ring)?;
        Ok(Self::from_map(
            &self.ring,
            sparse::combine(&self.ring, &self.terms, &other.terms, false),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ring.expect_same(&other.ring)?;
        Ok(Self::from_map(
            &self.ring,
            sparse::combine(&self.ring, &self.terms, &other.terms, true),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::from_map(&self.ring, sparse::scale(&self.ring, &self.terms, &self.ring.from_i64(-1)))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_map(&self.ring, sparse::scale(&self.ring, &self.terms, c))
    }

    /// Bilinear extension of `e(a)·e(b) = e(a+b)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.expect_same(&other.ring)?;
        let mut out = BTreeMap::new();
        for (r, c) in &self.terms {
            for (s, d) in &other.terms {
                sparse::accumulate(&mut out, &self.ring, r.add(s), self.ring.mul(c, d));
            }
        }
        Ok(Self::from_map(&self.ring, out))
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// `σ_n : e(r) ↦ e(nr)`, a ring endomorphism.
    pub fn sigma(&self, n: impl Into<BigUint>) -> Self {
        let n = n.into();
        self.map_labels(|r| r.scale(&n))
    }

    pub(crate) fn map_labels(&self, f: impl Fn(&QmodZ) -> QmodZ) -> Self {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(r, c)| (f(r), c.clone())),
        )
    }

    /// `ρ̃_n : e(γ) ↦ Σ_{nγ'=γ} e(γ')`. Linear, not multiplicative; the result
    /// has `n` times as many terms.
    pub fn rho_tilde(&self, n: u64) -> Self {
        assert!(n >= 1, "rho~ needs n >= 1");
        let mut out = BTreeMap::new();
        for (r, c) in &self.terms {
            for s in r.preimages(n) {
                sparse::accumulate(&mut out, &self.ring, s, c.clone());
            }
        }
        Self::from_map(&self.ring, out)
    }

    fn inverse_of(ring: &Ring, n: u64, op: &str) -> Result<Coeff> {
        ring.int_inverse(&BigUint::from(n))
            .ok_or_else(|| Error::NotInvertible {
                op: op.to_string(),
                ring: ring.name(),
                n: n.to_string(),
                detail: ring.characteristic_note(),
            })
    }

    /// `ρ_n = (1/n)·ρ̃_n`; refused unless `n` is invertible.
    pub fn rho(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("rho_n needs n >= 1"));
        }
        let inv = Self::inverse_of(&self.ring, n, &format!("rho_{n}"))?;
        Ok(self.rho_tilde(n).scale(&inv))
    }

    /// The idempotent `π_n = ρ_n(1) = (1/n)·Σ_{ns=0} e(s)`.
    pub fn pi(ring: &Ring, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("pi_n needs n >= 1"));
        }
        let inv = Self::inverse_of(ring, n, &format!("pi_{n}"))?;
        Ok(Self::one(ring).rho_tilde(n).scale(&inv))
    }

    /// `e(r) ↦ e(αr)` on the level-`N` subalgebra, for `α` a unit mod `N`.
    pub fn galois_twist(&self, alpha: &BigInt, level: &BigUint) -> Result<Self> {
        if level.is_zero() {
            return Err(Error::invalid("twist level must be positive"));
        }
        if mod_inverse(alpha, level).is_none() {
            return Err(Error::NotUnit {
                alpha: alpha.to_string(),
                modulus: level.to_string(),
            });
        }
        if let Some(r) = self.terms.keys().find(|r| !r.divides_level(level)) {
            return Err(Error::LevelViolation {
                r: r.to_string(),
                level: level.to_string(),
            });
        }
        Ok(self.map_labels(|r| r.scale_signed(alpha)))
    }

    /// The inverse twist, by `α⁻¹ mod N`.
    pub fn galois_untwist(&self, alpha: &BigInt, level: &BigUint) -> Result<Self> {
        let inv = mod_inverse(alpha, level).ok_or_else(|| Error::NotUnit {
            alpha: alpha.to_string(),
            modulus: level.to_string(),
        })?;
        self.galois_twist(&BigInt::from(inv), level)
    }

    /// `e(r) ↦ 1`.
    pub fn augmentation(&self) -> Coeff {
        self.terms
            .values()
            .fold(self.ring.zero(), |acc, c| self.ring.add(&acc, c))
    }

    /// Base change of an integral element along `Z → ring`.
    pub fn change_ring(&self, ring: &Ring) -> Result<Self> {
        if *ring == self.ring {
            return Ok(self.clone());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (r, c) in &self.terms {
            terms.push((r.clone(), ring.from_integer_coeff(c)?));
        }
        Ok(Self::from_terms(ring, terms))
    }

    /// `(σ_{p^l} ⊗ Frob^l)(f)`: scale labels by `p^l` and raise
    /// coefficients to the `p^l`-th power.
    pub fn frobenius_twist(&self, l: u32) -> Result<Self> {
        let p = self.ring.characteristic();
        if !self.ring.is_finite_field() {
            return Err(self.ring.unsupported(
                "frobenius",
                "the Frobenius correspondence needs a finite field",
            ));
        }
        let q = num_traits::pow(BigUint::from(p), l as usize);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (r, c) in &self.terms {
            terms.push((r.scale(&q), self.ring.frobenius(c, l as u64)?));
        }
        Ok(Self::from_terms(&self.ring, terms))
    }

    /// Compares `(σ_{p^l} ⊗ Frob^l)(f)` with the ring power `f^{p^l}`.
    pub fn frobenius_identity_holds(&self, l: u32) -> Result<bool> {
        let lhs = self.frobenius_twist(l)?;
        let exp = self.ring.characteristic().pow(l);
        Ok(lhs == self.pow(exp))
    }

    /// The text form, terms in `(den, num)` order.
    pub fn to_text(&self) -> String {
        sparse::format_sum(
            &self.ring,
            self.terms.iter().map(|(r, c)| {
                let mono = if r.is_zero() {
                    String::new()
                } else {
                    format!("e({r})")
                };
                (mono, c)
            }),
        )
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn e(ring: &Ring, n: i64, d: i64) -> GroupRingElem {
        GroupRingElem::e(ring, QmodZ::of(n, d))
    }

    fn sum(parts: &[GroupRingElem]) -> GroupRingElem {
        parts[1..]
            .iter()
            .fold(parts[0].clone(), |acc, x| acc.add(x).unwrap())
    }

    #[test]
    fn group_law() {
        let z = Ring::Integers;
        assert_eq!(e(&z, 1, 3).mul(&e(&z, 1, 3)).unwrap(), e(&z, 2, 3));
        assert_eq!(e(&z, 1, 2).mul(&e(&z, 1, 2)).unwrap(), GroupRingElem::one(&z));
        let q = Ring::Rationals;
        let x = sum(&[e(&q, 0, 1), e(&q, 1, 2)]);
        let expected = sum(&[e(&q, 0, 1), e(&q, 1, 2)]).scale(&q.from_i64(2));
        assert_eq!(x.mul(&x).unwrap(), expected);
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = e(&Ring::Integers, 1, 2);
        let b = e(&Ring::Rationals, 1, 2);
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch { .. })));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn sigma_examples() {
        let z = Ring::Integers;
        let x = sum(&[e(&z, 1, 4), e(&z, 3, 4)]);
        assert_eq!(x.sigma(2u32), e(&z, 1, 2).scale(&z.from_i64(2)));
        assert_eq!(e(&z, 1, 3).sigma(3u32), GroupRingElem::one(&z));
        let f2 = Ring::PrimeField(2);
        assert_eq!(e(&f2, 1, 3).sigma(2u32), e(&f2, 2, 3));
        // merged labels can cancel in characteristic 2
        assert!(sum(&[e(&f2, 1, 4), e(&f2, 3, 4)]).sigma(2u32).is_zero());
    }

    #[test]
    fn rho_tilde_examples() {
        let z = Ring::Integers;
        assert_eq!(e(&z, 1, 3).rho_tilde(2), sum(&[e(&z, 1, 6), e(&z, 2, 3)]));
        let x = sum(&[e(&z, 1, 5), e(&z, 2, 7).scale(&z.from_i64(-3))]);
        assert_eq!(x.rho_tilde(1), x);
        let f2 = Ring::PrimeField(2);
        let pt = GroupRingElem::one(&f2).rho_tilde(2);
        assert_eq!(pt, sum(&[e(&f2, 0, 1), e(&f2, 1, 2)]));
        assert!(pt.mul(&pt).unwrap().is_zero());
    }

    #[test]
    fn rho_and_pi() {
        let q = Ring::Rationals;
        let half = q.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        let pi2 = GroupRingElem::pi(&q, 2).unwrap();
        assert_eq!(pi2, sum(&[e(&q, 0, 1), e(&q, 1, 2)]).scale(&half));
        let pi3 = GroupRingElem::pi(&q, 3).unwrap();
        assert_eq!(pi2.mul(&pi3).unwrap(), GroupRingElem::pi(&q, 6).unwrap());
        let err = e(&Ring::PrimeField(2), 1, 3).rho(2).unwrap_err();
        assert_eq!(
            err.to_string(),
            "rho_2 undefined over F_2: 2 is not invertible in characteristic 2"
        );
        assert!(GroupRingElem::pi(&Ring::Integers, 2).is_err());
        // 3 is invertible in F_2
        assert!(GroupRingElem::pi(&Ring::PrimeField(2), 3).is_ok());
    }

    #[test]
    fn twists() {
        let z = Ring::Integers;
        let six = BigUint::from(6u32);
        assert_eq!(
            e(&z, 1, 6).galois_twist(&BigInt::from(5), &six).unwrap(),
            e(&z, 5, 6)
        );
        let x = sum(&[e(&z, 1, 6), e(&z, 1, 3), e(&z, 1, 2).scale(&z.from_i64(4))]);
        assert_eq!(x.galois_twist(&BigInt::one(), &six).unwrap(), x);
        let twice = x
            .galois_twist(&BigInt::from(5), &six)
            .unwrap()
            .galois_twist(&BigInt::from(5), &six)
            .unwrap();
        assert_eq!(twice, x);
        assert_eq!(
            x.galois_twist(&BigInt::from(5), &six)
                .unwrap()
                .galois_untwist(&BigInt::from(5), &six)
                .unwrap(),
            x
        );
        assert!(matches!(
            x.galois_twist(&BigInt::from(2), &six),
            Err(Error::NotUnit { .. })
        ));
        assert!(matches!(
            e(&z, 1, 4).galois_twist(&BigInt::from(5), &six),
            Err(Error::LevelViolation { .. })
        ));
        // negative units are accepted
        assert_eq!(
            e(&z, 1, 6).galois_twist(&BigInt::from(-1), &six).unwrap(),
            e(&z, 5, 6)
        );
    }

    #[test]
    fn augmentation_examples() {
        let z = Ring::Integers;
        assert_eq!(sum(&[e(&z, 1, 3), e(&z, 2, 3)]).augmentation(), z.from_i64(2));
        let q = Ring::Rationals;
        for n in 1..=12 {
            assert_eq!(GroupRingElem::pi(&q, n).unwrap().augmentation(), q.one());
        }
        assert_eq!(GroupRingElem::zero(&z).augmentation(), z.zero());
    }

    #[test]
    fn frobenius_identity_examples() {
        let f2 = Ring::PrimeField(2);
        let f = e(&f2, 1, 3);
        assert_eq!(f.frobenius_twist(1).unwrap(), f.mul(&f).unwrap());
        assert!(f.frobenius_identity_holds(1).unwrap());
        let f4 = Ring::ext_field(2, 2, None).unwrap();
        let t = f4.generator().unwrap();
        let g = GroupRingElem::monomial(&f4, QmodZ::of(1, 5), t.clone());
        let t2 = f4.mul(&t, &t);
        assert_eq!(
            g.frobenius_twist(1).unwrap(),
            GroupRingElem::monomial(&f4, QmodZ::of(2, 5), t2)
        );
        assert!(g.frobenius_identity_holds(1).unwrap());
        assert!(GroupRingElem::one(&f4).frobenius_identity_holds(2).unwrap());
        assert!(e(&Ring::Rationals, 1, 3).frobenius_identity_holds(1).is_err());
    }

    #[test]
    fn text_form() {
        let q = Ring::Rationals;
        assert_eq!(GroupRingElem::pi(&q, 2).unwrap().to_text(), "1/2 + 1/2*e(1/2)");
        let z = Ring::Integers;
        let x = sum(&[e(&z, 2, 3).scale(&z.from_i64(-1)), e(&z, 1, 3)]);
        assert_eq!(x.to_text(), "e(1/3) - e(2/3)");
        assert_eq!(GroupRingElem::zero(&z).to_text(), "0");
    }

    #[test]
    fn base_change() {
        let z = Ring::Integers;
        let x = sum(&[e(&z, 1, 3).scale(&z.from_i64(4)), e(&z, 1, 2).scale(&z.from_i64(3))]);
        let f2 = Ring::PrimeField(2);
        assert_eq!(x.change_ring(&f2).unwrap(), e(&f2, 1, 2));
        assert!(x.change_ring(&f2).unwrap().change_ring(&z).is_err());
    }
}
