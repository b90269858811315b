use crate::arith::{Coeff, QmodZ, Ring};
use crate::error::{Error, Result};

use super::GroupRingElem;

/// A residue class in `R[T]/(T^n − 1)`, stored as its `n` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicPoly {
    ring: Ring,
    coeffs: Vec<Coeff>,
}

impl CyclotomicPoly {
    pub fn zero(ring: &Ring, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("cyclotomic level must be positive"));
        }
        Ok(CyclotomicPoly {
            ring: ring.clone(),
            coeffs: vec![ring.zero(); n],
        })
    }

    /// Reduces an arbitrary coefficient list modulo `T^n − 1`.
    pub fn from_coeffs(ring: &Ring, n: usize, coeffs: &[Coeff]) -> Result<Self> {
        let mut out = Self::zero(ring, n)?;
        for (i, c) in coeffs.iter().enumerate() {
            let slot = &mut out.coeffs[i % n];
            *slot = ring.add(slot, c);
        }
        Ok(out)
    }

    /// The class `u(n)^k` of `T^k`.
    pub fn u_pow(ring: &Ring, n: usize, k: usize) -> Result<Self> {
        let mut out = Self::zero(ring, n)?;
        out.coeffs[k % n] = ring.one();
        Ok(out)
    }

    pub fn u(ring: &Ring, n: usize) -> Result<Self> {
        Self::u_pow(ring, n, 1)
    }

    pub fn level(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn check(&self, other: &Self) -> Result<()> {
        self.ring.expect_same(&other.ring)?;
        if self.level() != other.level() {
            return Err(Error::invalid(format!(
                "cyclotomic levels differ: {} and {}",
                self.level(),
                other.level()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(CyclotomicPoly {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| self.ring.add(a, b))
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.level();
        let mut out = Self::zero(&self.ring, n)?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let slot = &mut out.coeffs[(i + j) % n];
                *slot = self.ring.add(slot, &self.ring.mul(a, b));
            }
        }
        Ok(out)
    }

    /// `u(n)^k ↦ e(k/n)`.
    pub fn to_group_ring(&self) -> GroupRingElem {
        let n = self.level() as i64;
        GroupRingElem::from_terms(
            &self.ring,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (QmodZ::of(k as i64, n), c.clone())),
        )
    }

    /// The transition map to level `m`, sending `u(n) ↦ u(m)^{m/n}`.
    pub fn level_map(&self, m: usize) -> Result<Self> {
        let n = self.level();
        if m == 0 || !m.is_multiple_of(n) {
            return Err(Error::LevelNotDivisor {
                n: n.to_string(),
                m: m.to_string(),
            });
        }
        let step = m / n;
        let mut out = Self::zero(&self.ring, m)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[k * step] = c.clone();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_goes_to_e() {
        let z = Ring::Integers;
        let u2 = CyclotomicPoly::u(&z, 2).unwrap();
        assert_eq!(u2.to_group_ring(), GroupRingElem::e(&z, QmodZ::of(1, 2)));
        assert_eq!(u2.mul(&u2).unwrap(), CyclotomicPoly::u_pow(&z, 2, 0).unwrap());
    }

    #[test]
    fn level_maps() {
        let z = Ring::Integers;
        let u2 = CyclotomicPoly::u(&z, 2).unwrap();
        assert_eq!(u2.level_map(4).unwrap(), CyclotomicPoly::u_pow(&z, 4, 2).unwrap());
        let u3 = CyclotomicPoly::u(&z, 3).unwrap();
        let lifted = u3.level_map(6).unwrap();
        assert_eq!(lifted.to_group_ring(), u3.to_group_ring());
        assert_eq!(lifted.to_group_ring(), GroupRingElem::e(&z, QmodZ::of(1, 3)));
        assert!(matches!(u3.level_map(4), Err(Error::LevelNotDivisor { .. })));
    }

    #[test]
    fn conversion_is_multiplicative() {
        let z = Ring::Integers;
        let a = CyclotomicPoly::from_coeffs(&z, 5, &[z.from_i64(1), z.from_i64(-2), z.zero(), z.from_i64(3)]).unwrap();
        let b = CyclotomicPoly::from_coeffs(&z, 5, &[z.zero(), z.from_i64(4), z.zero(), z.zero(), z.from_i64(1), z.from_i64(7)]).unwrap();
        let lhs = a.mul(&b).unwrap().to_group_ring();
        let rhs = a.to_group_ring().mul(&b.to_group_ring()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            a.level_map(10).unwrap().mul(&b.level_map(10).unwrap()).unwrap(),
            a.mul(&b).unwrap().level_map(10).unwrap()
        );
    }
}
