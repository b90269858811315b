//! Exact sums `Σ q_s·√s` over square-free `s` with rational `q_s`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::numtheory::square_free_decompose;

/// A finite combination of square roots of square-free positive integers.
/// Key `1` is the rational part. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SqrtRat {
    terms: BTreeMap<BigUint, BigRational>,
}

impl SqrtRat {
    pub fn zero() -> Self {
        SqrtRat::default()
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(BigUint::one(), q);
        }
        SqrtRat { terms }
    }

    /// `√n` for any nonnegative integer, rewritten as `c·√s`.
    pub fn sqrt_of(n: &BigUint) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let (c, s) = square_free_decompose(n);
        let mut terms = BTreeMap::new();
        terms.insert(s, BigRational::from_integer(c.into()));
        SqrtRat { terms }
    }

    /// Builds from raw `(s, q)` pairs; every `s` must be square-free.
    pub fn from_terms(pairs: impl IntoIterator<Item = (BigUint, BigRational)>) -> Option<Self> {
        let mut out = SqrtRat::zero();
        for (s, q) in pairs {
            if s.is_zero() || !square_free_decompose(&s).0.is_one() {
                return None;
            }
            out.add_term(s, q);
        }
        Some(out)
    }

    fn add_term(&mut self, s: BigUint, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(s.clone()).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a plain rational, when no irrational part is present.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self
                .terms
                .get(&BigUint::one())
                .cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &SqrtRat) -> SqrtRat {
        let mut out = self.clone();
        for (s, q) in &other.terms {
            out.add_term(s.clone(), q.clone());
        }
        out
    }

    pub fn neg(&self) -> SqrtRat {
        SqrtRat {
            terms: self.terms.iter().map(|(s, q)| (s.clone(), -q)).collect(),
        }
    }

    pub fn sub(&self, other: &SqrtRat) -> SqrtRat {
        self.add(&other.neg())
    }

    /// `√s·√t = g·√(st/g²)` with `g = gcd(s, t)`; both square-free, so `g²`
    /// is the largest square dividing `st`.
    pub fn mul(&self, other: &SqrtRat) -> SqrtRat {
        let mut out = SqrtRat::zero();
        for (s, q) in &self.terms {
            for (t, r) in &other.terms {
                let g = s.gcd(t);
                let key = (s / &g) * (t / &g);
                let coeff = q * r * BigRational::from_integer(g.into());
                out.add_term(key, coeff);
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> SqrtRat {
        if q.is_zero() {
            return SqrtRat::zero();
        }
        SqrtRat {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * q)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn squares_of_roots() {
        for s in 1u32..=30 {
            let r = SqrtRat::sqrt_of(&BigUint::from(s));
            assert_eq!(r.mul(&r), SqrtRat::rational(rat(s as i64, 1)), "s={s}");
        }
    }

    #[test]
    fn product_rule_keeps_keys_square_free() {
        let r6 = SqrtRat::sqrt_of(&6u32.into());
        let r10 = SqrtRat::sqrt_of(&10u32.into());
        // √6·√10 = √60 = 2√15
        let expected = SqrtRat::from_terms([(BigUint::from(15u32), rat(2, 1))]).unwrap();
        assert_eq!(r6.mul(&r10), expected);
        assert_eq!(SqrtRat::sqrt_of(&12u32.into()), SqrtRat::from_terms([(3u32.into(), rat(2, 1))]).unwrap());
    }

    #[test]
    fn rejects_non_square_free_keys() {
        assert!(SqrtRat::from_terms([(BigUint::from(8u32), rat(1, 1))]).is_none());
        assert!(SqrtRat::from_terms([(BigUint::from(0u32), rat(1, 1))]).is_none());
    }

    #[test]
    fn cancellation() {
        let r2 = SqrtRat::sqrt_of(&2u32.into());
        assert!(r2.sub(&r2).is_zero());
        assert_eq!(r2.scale(&rat(1, 2)).mul(&r2), SqrtRat::one());
        assert_eq!(SqrtRat::one().as_rational(), Some(rat(1, 1)));
        assert_eq!(r2.as_rational(), None);
    }
}
