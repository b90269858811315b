use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::numtheory::prime_power_exponent;
use crate::arith::QmodZ;
use crate::error::{Error, Result};

/// A fraction `k/p^n` in `[0, 1)`, reduced. Ordered by value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PAdicFrac {
    num: BigUint,
    den: BigUint,
}

impl PAdicFrac {
    pub fn zero() -> Self {
        PAdicFrac {
            num: BigUint::zero(),
            den: BigUint::one(),
        }
    }

    fn reduced(num: BigUint, den: BigUint) -> Self {
        let g = num.gcd(&den);
        if num.is_zero() {
            return Self::zero();
        }
        PAdicFrac {
            num: num / &g,
            den: den / &g,
        }
    }

    /// `k/p^n`, which must lie in `[0, 1)`.
    pub fn new(k: impl Into<BigUint>, p: u64, n: u32) -> Result<Self> {
        let k = k.into();
        let den = num_traits::pow(BigUint::from(p), n as usize);
        if k >= den {
            return Err(Error::invalid(format!("{k}/{den} is not below 1")));
        }
        Ok(Self::reduced(k, den))
    }

    /// Reads a `Q/Z` label whose denominator is a power of `p`.
    pub fn from_qmodz(r: &QmodZ, p: u64) -> Result<Self> {
        if prime_power_exponent(r.den(), p).is_none() {
            return Err(Error::NotPPower {
                label: r.to_string(),
                p,
            });
        }
        Ok(Self::reduced(r.num().clone(), r.den().clone()))
    }

    pub fn to_qmodz(&self) -> QmodZ {
        QmodZ::new(BigInt::from(self.num.clone()), BigInt::from(self.den.clone()))
            .expect("positive denominator")
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The exponent `n` of the denominator `p^n`.
    pub fn level(&self, p: u64) -> u32 {
        prime_power_exponent(&self.den, p).expect("p-power denominator")
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone().into(), self.den.clone().into())
    }

    /// `self + other`, or `None` once the sum reaches one.
    pub fn add(&self, other: &PAdicFrac) -> Option<PAdicFrac> {
        let den = self.den.lcm(&other.den);
        let num = &self.num * (&den / &self.den) + &other.num * (&den / &other.den);
        if num >= den {
            None
        } else {
            Some(Self::reduced(num, den))
        }
    }

    /// `p^j·a`, or `None` once it reaches one.
    pub fn times_p_pow(&self, p: u64, j: u32) -> Option<PAdicFrac> {
        let num = &self.num * num_traits::pow(BigUint::from(p), j as usize);
        if num >= self.den {
            None
        } else {
            Some(Self::reduced(num, self.den.clone()))
        }
    }

    /// `(a + p − 1)/p`, which stays in `[0, 1)`.
    pub fn alpha(&self, p: u64) -> PAdicFrac {
        let num = &self.num + BigUint::from(p - 1) * &self.den;
        Self::reduced(num, &self.den * p)
    }

    /// `α^j(a) = (a + p^j − 1)/p^j`.
    pub fn alpha_pow(&self, p: u64, j: u32) -> PAdicFrac {
        let pj = num_traits::pow(BigUint::from(p), j as usize);
        let num = &self.num + (&pj - 1u32) * &self.den;
        Self::reduced(num, &self.den * pj)
    }

    /// `(p^m − 1)/p^m`.
    pub fn top(p: u64, m: u32) -> PAdicFrac {
        let pm = num_traits::pow(BigUint::from(p), m as usize);
        Self::reduced(&pm - 1u32, pm)
    }

    /// Every `k/p^level` with `k < p^level`, ascending.
    pub fn grid(p: u64, level: u32) -> Vec<PAdicFrac> {
        let n = num_traits::pow(BigUint::from(p), level as usize);
        let mut out = Vec::new();
        let mut k = BigUint::zero();
        while k < n {
            out.push(Self::reduced(k.clone(), n.clone()));
            k += 1u32;
        }
        out
    }

    /// `p·a ∈ [0, 1)`, i.e. `a < 1/p`.
    pub fn below_inverse_p(&self, p: u64) -> bool {
        &self.num * p < self.den
    }

    pub fn parse(s: &str, p: u64) -> Result<Self> {
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = BigUint::from_str(num).map_err(|_| Error::parse("p-adic fraction", s))?;
        let den = BigUint::from_str(den).map_err(|_| Error::parse("p-adic fraction", s))?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num >= den {
            return Err(Error::invalid(format!("{s} is not below 1")));
        }
        Self::from_qmodz(&QmodZ::new(num, den)?, p)
    }
}

impl Ord for PAdicFrac {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for PAdicFrac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PAdicFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for PAdicFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(k: u32, p: u64, n: u32) -> PAdicFrac {
        PAdicFrac::new(k, p, n).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(f(2, 2, 2), f(1, 2, 1));
        assert_eq!(f(0, 3, 4), PAdicFrac::zero());
        assert_eq!(f(3, 3, 2).level(3), 1);
        assert!(PAdicFrac::new(4u32, 2, 2).is_err());
    }

    #[test]
    fn ordering_by_value() {
        let mut v = vec![f(3, 2, 2), f(1, 2, 1), f(1, 2, 3), PAdicFrac::zero()];
        v.sort();
        assert_eq!(v, vec![PAdicFrac::zero(), f(1, 2, 3), f(1, 2, 1), f(3, 2, 2)]);
    }

    #[test]
    fn affine_moves() {
        assert_eq!(f(1, 3, 1).add(&f(1, 3, 1)), Some(f(2, 3, 1)));
        assert_eq!(f(2, 3, 1).add(&f(1, 3, 1)), None);
        assert_eq!(f(1, 2, 2).times_p_pow(2, 1), Some(f(1, 2, 1)));
        assert_eq!(f(2, 3, 1).times_p_pow(3, 1), None);
        assert_eq!(PAdicFrac::zero().alpha(2), f(1, 2, 1));
        assert_eq!(f(1, 2, 1).alpha(2), f(3, 2, 2));
        assert_eq!(f(1, 5, 1).alpha_pow(5, 2), f(1, 5, 1).alpha(5).alpha(5));
        assert_eq!(PAdicFrac::top(2, 2), f(3, 2, 2));
        assert_eq!(PAdicFrac::top(3, 0), PAdicFrac::zero());
    }

    #[test]
    fn parsing_and_grid() {
        assert_eq!(PAdicFrac::parse("3/9", 3).unwrap(), f(1, 3, 1));
        assert!(PAdicFrac::parse("1/6", 2).is_err());
        assert!(PAdicFrac::parse("5/4", 2).is_err());
        assert_eq!(PAdicFrac::grid(2, 2).len(), 4);
        assert_eq!(PAdicFrac::from_qmodz(&QmodZ::of(3, 8), 2).unwrap(), f(3, 2, 3));
        assert!(PAdicFrac::from_qmodz(&QmodZ::of(1, 6), 2).is_err());
    }
}
