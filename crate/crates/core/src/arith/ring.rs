//! The coefficient rings every algebra in this crate is generic over.
//!
//! A [`Ring`] is a runtime descriptor; a [`Coeff`] is a value that only
//! makes sense together with the ring it was produced by. All arithmetic
//! goes through the ring so that, for instance, `Coeff::Mod` knows its
//! modulus.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::ext_field::{format_poly, ExtField};
use super::numtheory::is_prime;
use super::sqrt::SqrtRat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    /// `Z`
    Integers,
    /// `Q`
    Rationals,
    /// `F_p`
    PrimeField(u64),
    /// `F_{p^k}`
    ExtField(Arc<ExtField>),
    /// `Q` with formal square roots of square-free integers adjoined.
    SqrtRationals,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    Poly(Vec<u64>),
    Sqrt(SqrtRat),
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn reduce_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn pow_mod(a: u64, mut e: u64, p: u64) -> u64 {
    let mut result = 1 % p;
    let mut base = a % p;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn ext_field(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<Ring> {
        Ok(Ring::ExtField(Arc::new(ExtField::new(p, k, modulus)?)))
    }

    /// `0` for characteristic zero.
    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::PrimeField(p) => *p,
            Ring::ExtField(f) => f.characteristic(),
            _ => 0,
        }
    }

    pub fn is_finite_field(&self) -> bool {
        matches!(self, Ring::PrimeField(_) | Ring::ExtField(_))
    }

    /// Every nonzero integer is invertible and conjugation is available.
    pub fn divides_integers(&self) -> bool {
        matches!(self, Ring::Rationals | Ring::SqrtRationals)
    }

    /// Short human-readable name used in diagnostics.
    pub fn name(&self) -> String {
        match self {
            Ring::Integers => "Z".into(),
            Ring::Rationals => "Q".into(),
            Ring::PrimeField(p) => format!("F_{p}"),
            Ring::ExtField(f) => f.to_string(),
            Ring::SqrtRationals => "Q(sqrt)".into(),
        }
    }

    /// Machine tag, the same spelling the command line accepts.
    pub fn tag(&self) -> String {
        match self {
            Ring::Integers => "z".into(),
            Ring::Rationals => "q".into(),
            Ring::PrimeField(p) => format!("fp:{p}"),
            Ring::ExtField(f) => format!(
                "fq:{},{},{}",
                f.characteristic(),
                f.degree(),
                format_poly(f.modulus(), "t").replace(' ', "")
            ),
            Ring::SqrtRationals => "qsqrt".into(),
        }
    }

    pub(crate) fn expect_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.name(),
                right: other.name(),
            })
        }
    }

    pub(crate) fn unsupported(&self, op: &str, reason: &str) -> Error {
        Error::UnsupportedRing {
            op: op.into(),
            ring: self.name(),
            reason: reason.into(),
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_bigint(&BigInt::zero())
    }

    pub fn one(&self) -> Coeff {
        self.from_bigint(&BigInt::one())
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_biguint(&self, n: &BigUint) -> Coeff {
        self.from_bigint(&BigInt::from(n.clone()))
    }

    /// The image of an integer under the structure map `Z → R`.
    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            Ring::Integers => Coeff::Int(n.clone()),
            Ring::Rationals => Coeff::Rat(BigRational::from_integer(n.clone())),
            Ring::PrimeField(p) => Coeff::Mod(reduce_mod(n, *p)),
            Ring::ExtField(f) => Coeff::Poly(f.from_int(reduce_mod(n, f.characteristic()))),
            Ring::SqrtRationals => Coeff::Sqrt(SqrtRat::rational(BigRational::from_integer(n.clone()))),
        }
    }

    /// The image of a rational number, when its denominator is invertible.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        if q.is_integer() {
            return Ok(self.from_bigint(q.numer()));
        }
        match self {
            Ring::Rationals => Ok(Coeff::Rat(q.clone())),
            Ring::SqrtRationals => Ok(Coeff::Sqrt(SqrtRat::rational(q.clone()))),
            _ => {
                let den = q.denom().magnitude().clone();
                let inv = self.int_inverse(&den).ok_or_else(|| Error::NotInvertible {
                    op: format!("the literal {q}"),
                    ring: self.name(),
                    n: den.to_string(),
                    detail: self.characteristic_note(),
                })?;
                Ok(self.mul(&self.from_bigint(q.numer()), &inv))
            }
        }
    }

    pub(crate) fn characteristic_note(&self) -> String {
        match self.characteristic() {
            0 => String::new(),
            p => format!(" in characteristic {p}"),
        }
    }

    /// `(n·1)⁻¹`, if it exists.
    pub fn int_inverse(&self, n: &BigUint) -> Option<Coeff> {
        if n.is_zero() {
            return None;
        }
        match self {
            Ring::Integers => n.is_one().then(|| Coeff::Int(BigInt::one())),
            Ring::Rationals => Some(Coeff::Rat(BigRational::new(BigInt::one(), n.clone().into()))),
            Ring::SqrtRationals => Some(Coeff::Sqrt(SqrtRat::rational(BigRational::new(
                BigInt::one(),
                n.clone().into(),
            )))),
            Ring::PrimeField(p) => {
                let r = reduce_mod(&n.clone().into(), *p);
                (r != 0).then(|| Coeff::Mod(pow_mod(r, p - 2, *p)))
            }
            Ring::ExtField(f) => {
                let p = f.characteristic();
                let r = reduce_mod(&n.clone().into(), p);
                (r != 0).then(|| Coeff::Poly(f.from_int(pow_mod(r, p - 2, p))))
            }
        }
    }

    /// Formal `√n`; only the square-root ring has it.
    pub fn sqrt(&self, n: &BigUint) -> Result<Coeff> {
        match self {
            Ring::SqrtRationals => Ok(Coeff::Sqrt(SqrtRat::sqrt_of(n))),
            _ => Err(self.unsupported("sqrt", "square roots need the qsqrt ring")),
        }
    }

    /// The class of `t` in `F_{p^k} = F_p[t]/(m)`.
    pub fn generator(&self) -> Result<Coeff> {
        match self {
            Ring::ExtField(f) => Ok(Coeff::Poly(f.generator())),
            _ => Err(self.unsupported("t", "the field generator exists only in F_q rings")),
        }
    }

    /// True when `c` is a well-formed value of this ring.
    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (Ring::Integers, Coeff::Int(_)) | (Ring::Rationals, Coeff::Rat(_)) => true,
            (Ring::PrimeField(p), Coeff::Mod(v)) => v < p,
            (Ring::ExtField(f), Coeff::Poly(v)) => {
                v.len() == f.degree() && v.iter().all(|&x| x < f.characteristic())
            }
            (Ring::SqrtRationals, Coeff::Sqrt(_)) => true,
            _ => false,
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Int(n) => n.is_zero(),
            Coeff::Rat(q) => q.is_zero(),
            Coeff::Mod(v) => *v == 0,
            Coeff::Poly(v) => v.iter().all(|&x| x == 0),
            Coeff::Sqrt(s) => s.is_zero(),
        }
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        *c == self.one()
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (_, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x + y),
            (_, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Ring::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => Coeff::Mod((x + y) % p),
            (Ring::ExtField(f), Coeff::Poly(x), Coeff::Poly(y)) => Coeff::Poly(f.add(x, y)),
            (_, Coeff::Sqrt(x), Coeff::Sqrt(y)) => Coeff::Sqrt(x.add(y)),
            _ => panic!("coefficient {a:?} or {b:?} does not belong to {}", self.name()),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (_, Coeff::Int(x)) => Coeff::Int(-x),
            (_, Coeff::Rat(x)) => Coeff::Rat(-x),
            (Ring::PrimeField(p), Coeff::Mod(x)) => Coeff::Mod((p - x) % p),
            (Ring::ExtField(f), Coeff::Poly(x)) => Coeff::Poly(f.neg(x)),
            (_, Coeff::Sqrt(x)) => Coeff::Sqrt(x.neg()),
            _ => panic!("coefficient {a:?} does not belong to {}", self.name()),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (_, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x * y),
            (_, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Ring::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => Coeff::Mod(mul_mod(*x, *y, *p)),
            (Ring::ExtField(f), Coeff::Poly(x), Coeff::Poly(y)) => Coeff::Poly(f.mul(x, y)),
            (_, Coeff::Sqrt(x), Coeff::Sqrt(y)) => Coeff::Sqrt(x.mul(y)),
            _ => panic!("coefficient {a:?} or {b:?} does not belong to {}", self.name()),
        }
    }

    pub fn mul_int(&self, a: &Coeff, n: &BigUint) -> Coeff {
        self.mul(a, &self.from_biguint(n))
    }

    pub fn pow(&self, a: &Coeff, exp: &BigUint) -> Coeff {
        let mut result = self.one();
        let mut base = a.clone();
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                result = self.mul(&result, &base);
            }
            if i + 1 < bits {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// `x ↦ x^(p^l)`, the `l`-th power of the small Frobenius.
    pub fn frobenius(&self, a: &Coeff, l: u64) -> Result<Coeff> {
        match (self, a) {
            // Fermat: the prime field is fixed pointwise.
            (Ring::PrimeField(_), Coeff::Mod(_)) => Ok(a.clone()),
            (Ring::ExtField(f), Coeff::Poly(x)) => Ok(Coeff::Poly(f.frobenius(x, l))),
            _ => Err(self.unsupported(
                "frobenius",
                "the Frobenius needs a field of positive characteristic",
            )),
        }
    }

    /// Base change along the structure map `Z → R`.
    pub fn from_integer_coeff(&self, c: &Coeff) -> Result<Coeff> {
        match c {
            Coeff::Int(n) => Ok(self.from_bigint(n)),
            _ => Err(Error::invalid("base change expects integer coefficients")),
        }
    }

    /// Every element of a finite field, in counting order.
    pub fn finite_elements(&self) -> Option<Vec<Coeff>> {
        match self {
            Ring::PrimeField(p) => Some((0..*p).map(Coeff::Mod).collect()),
            Ring::ExtField(f) => Some(f.elements().map(Coeff::Poly).collect()),
            _ => None,
        }
    }

    /// Splits off a printable sign: `(true, |c|)` for negative integers,
    /// rationals and single-term root sums.
    pub fn sign_split(&self, c: &Coeff) -> (bool, Coeff) {
        match c {
            Coeff::Int(n) if n.is_negative() => (true, Coeff::Int(-n)),
            Coeff::Rat(q) if q.is_negative() => (true, Coeff::Rat(-q)),
            Coeff::Sqrt(s) if s.len() == 1 && s.terms().all(|(_, q)| q.is_negative()) => {
                (true, Coeff::Sqrt(s.neg()))
            }
            _ => (false, c.clone()),
        }
    }

    /// Whether the printed coefficient can be followed by `*` without
    /// parentheses.
    pub fn is_atomic(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Poly(v) => v.iter().filter(|&&x| x != 0).count() <= 1,
            Coeff::Sqrt(s) => s.len() <= 1,
            _ => true,
        }
    }

    /// Text form that the expression parser reads back.
    pub fn format(&self, c: &Coeff) -> String {
        match c {
            Coeff::Int(n) => n.to_string(),
            Coeff::Rat(q) => q.to_string(),
            Coeff::Mod(v) => v.to_string(),
            Coeff::Poly(v) => format_poly(v, "t"),
            Coeff::Sqrt(s) => {
                if s.is_zero() {
                    return "0".into();
                }
                let mut out = String::new();
                for (i, (k, q)) in s.terms().enumerate() {
                    let neg = q.is_negative();
                    let q = q.abs();
                    let body = match (k.is_one(), q.is_one()) {
                        (true, _) => q.to_string(),
                        (false, true) => format!("sqrt({k})"),
                        (false, false) => format!("{q}*sqrt({k})"),
                    };
                    match (i, neg) {
                        (0, true) => out.push('-'),
                        (0, false) => {}
                        (_, true) => out.push_str(" - "),
                        (_, false) => out.push_str(" + "),
                    }
                    out.push_str(&body);
                }
                out
            }
        }
    }

    pub fn coeff_to_json(&self, c: &Coeff) -> Value {
        match c {
            Coeff::Int(n) => Value::String(n.to_string()),
            Coeff::Rat(q) => Value::String(q.to_string()),
            Coeff::Mod(v) => json!(v),
            Coeff::Poly(v) => json!(v),
            Coeff::Sqrt(s) => Value::Array(
                s.terms()
                    .map(|(k, q)| json!({"s": k.to_string(), "q": q.to_string()}))
                    .collect(),
            ),
        }
    }

    pub fn coeff_from_json(&self, v: &Value) -> Result<Coeff> {
        let bad = || Error::parse("coefficient", v.to_string());
        let c = match self {
            Ring::Integers => Coeff::Int(v.as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?),
            Ring::Rationals => Coeff::Rat(parse_rational(v.as_str().ok_or_else(bad)?).ok_or_else(bad)?),
            Ring::PrimeField(_) => Coeff::Mod(v.as_u64().ok_or_else(bad)?),
            Ring::ExtField(_) => Coeff::Poly(
                v.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_u64().ok_or_else(bad))
                    .collect::<Result<_>>()?,
            ),
            Ring::SqrtRationals => {
                let mut pairs = Vec::new();
                for t in v.as_array().ok_or_else(bad)? {
                    let s: BigUint = t["s"].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    let q = parse_rational(t["q"].as_str().ok_or_else(bad)?).ok_or_else(bad)?;
                    pairs.push((s, q));
                }
                Coeff::Sqrt(SqrtRat::from_terms(pairs).ok_or_else(bad)?)
            }
        };
        if self.contains(&c) {
            Ok(c)
        } else {
            Err(bad())
        }
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    (!d.is_zero()).then(|| BigRational::new(n, d))
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for Ring {
    type Err = Error;

    /// `z | q | fp:<p> | fq:<p>,<k>[,<poly>] | qsqrt`
    fn from_str(s: &str) -> Result<Ring> {
        let bad = || Error::parse("ring", s);
        match s.trim() {
            "z" => Ok(Ring::Integers),
            "q" => Ok(Ring::Rationals),
            "qsqrt" => Ok(Ring::SqrtRationals),
            other => {
                if let Some(p) = other.strip_prefix("fp:") {
                    Ring::prime_field(p.trim().parse().map_err(|_| bad())?)
                } else if let Some(rest) = other.strip_prefix("fq:") {
                    let mut parts = rest.splitn(3, ',');
                    let p: u64 = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
                    let k: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
                    if !is_prime(p) {
                        return Err(Error::NotPrime(p.to_string()));
                    }
                    let modulus = parts.next().map(|m| ExtField::parse_poly(m, p)).transpose()?;
                    Ring::ext_field(p, k, modulus)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for tag in ["z", "q", "fp:7", "fq:2,2,t^2+t+1", "fq:3,2,t^2+1", "qsqrt"] {
            let ring: Ring = tag.parse().unwrap();
            assert_eq!(ring.tag(), tag);
        }
        let f8: Ring = "fq:2,3".parse().unwrap();
        assert_eq!(f8.tag(), "fq:2,3,t^3+t+1");
        assert!("fp:6".parse::<Ring>().is_err());
        assert!("fq:2,2,t^2+1".parse::<Ring>().is_err());
        assert!("r".parse::<Ring>().is_err());
    }

    #[test]
    fn characteristic_kills_p() {
        for ring in [Ring::PrimeField(5), Ring::ext_field(2, 3, None).unwrap()] {
            let p = ring.characteristic();
            assert!(ring.is_zero(&ring.from_i64(p as i64)));
            assert!(!ring.is_zero(&ring.from_i64(1)));
        }
    }

    #[test]
    fn inverses() {
        let f2 = Ring::PrimeField(2);
        assert!(f2.int_inverse(&2u32.into()).is_none());
        assert_eq!(f2.int_inverse(&3u32.into()), Some(Coeff::Mod(1)));
        let f7 = Ring::PrimeField(7);
        let inv = f7.int_inverse(&3u32.into()).unwrap();
        assert_eq!(f7.mul(&inv, &f7.from_i64(3)), f7.one());
        assert!(Ring::Integers.int_inverse(&2u32.into()).is_none());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f7.from_rational(&half).unwrap(), Coeff::Mod(4));
        assert!(Ring::Integers.from_rational(&half).is_err());
    }

    #[test]
    fn frobenius_only_in_positive_characteristic() {
        assert_eq!(Ring::PrimeField(2).frobenius(&Coeff::Mod(1), 3).unwrap(), Coeff::Mod(1));
        let f4 = Ring::ext_field(2, 2, None).unwrap();
        let t = f4.generator().unwrap();
        assert_eq!(f4.frobenius(&t, 1).unwrap(), Coeff::Poly(vec![1, 1]));
        assert_eq!(f4.frobenius(&f4.zero(), 7).unwrap(), f4.zero());
        assert!(Ring::Rationals.frobenius(&Ring::Rationals.one(), 1).is_err());
        assert!(Ring::Integers.frobenius(&Ring::Integers.one(), 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let rings = [
            Ring::Integers,
            Ring::Rationals,
            Ring::PrimeField(5),
            Ring::ext_field(3, 2, None).unwrap(),
            Ring::SqrtRationals,
        ];
        for ring in rings {
            let c = ring.sub(&ring.from_i64(7), &ring.one());
            let c = match &ring {
                Ring::SqrtRationals => ring.add(&c, &ring.sqrt(&6u32.into()).unwrap()),
                Ring::Rationals => ring.from_rational(&BigRational::new((-3).into(), 4.into())).unwrap(),
                _ => c,
            };
            let v = ring.coeff_to_json(&c);
            assert_eq!(ring.coeff_from_json(&v).unwrap(), c, "{v}");
        }
        assert!(Ring::PrimeField(5).coeff_from_json(&json!(9)).is_err());
    }

    #[test]
    fn formatting() {
        let q = Ring::SqrtRationals;
        let c = q.add(&q.from_i64(3), &q.mul(&q.from_rational(&BigRational::new((-1).into(), 2.into())).unwrap(), &q.sqrt(&2u32.into()).unwrap()));
        assert_eq!(q.format(&c), "3 - 1/2*sqrt(2)");
        assert!(!q.is_atomic(&c));
        let f4 = Ring::ext_field(2, 2, None).unwrap();
        assert_eq!(f4.format(&Coeff::Poly(vec![1, 1])), "t + 1");
        assert_eq!(Ring::Rationals.format(&Ring::Rationals.from_i64(3)), "3");
    }
}
