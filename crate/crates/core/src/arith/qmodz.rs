//! Torsion labels `r ∈ Q/Z` and positive rational degrees `a/b ∈ Q*₊`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::numtheory::{mod_inverse, split_prime_power};
use crate::error::{Error, Result};

/// An element of `Q/Z`, stored as a reduced fraction in `[0, 1)`.
///
/// Field order makes the derived `Ord` sort by `(den, num)`, which is the
/// printing order for group-ring terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QmodZ {
    den: BigUint,
    num: BigUint,
}

impl QmodZ {
    pub fn zero() -> Self {
        QmodZ {
            den: BigUint::one(),
            num: BigUint::zero(),
        }
    }

    /// `num/den` reduced modulo 1. Negative numerators wrap around.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let mut num = num.into();
        let mut den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if den.sign() == Sign::Minus {
            num = -num;
            den = -den;
        }
        let num = num.mod_floor(&den);
        let g = num.gcd(&den);
        let (num, den) = (num / &g, den / &g);
        Ok(QmodZ {
            num: num.to_biguint().expect("nonnegative"),
            den: den.to_biguint().expect("positive"),
        })
    }

    /// Convenience constructor for literals; panics on a zero denominator.
    pub fn of(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    fn from_reduced_parts(num: BigUint, den: BigUint) -> Self {
        let g = num.gcd(&den);
        if g.is_one() {
            QmodZ { num, den }
        } else {
            QmodZ {
                num: num / &g,
                den: den / &g,
            }
        }
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

    /// The additive order, which equals the reduced denominator.
    pub fn order(&self) -> &BigUint {
        &self.den
    }

    pub fn add(&self, other: &QmodZ) -> QmodZ {
        let den = &self.den * &other.den;
        let num = (&self.num * &other.den + &other.num * &self.den) % &den;
        Self::from_reduced_parts(num, den)
    }

    pub fn neg(&self) -> QmodZ {
        if self.num.is_zero() {
            return self.clone();
        }
        QmodZ {
            num: &self.den - &self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &QmodZ) -> QmodZ {
        self.add(&other.neg())
    }

    /// `n·r` reduced modulo 1.
    pub fn scale(&self, n: &BigUint) -> QmodZ {
        let num = (&self.num * n) % &self.den;
        Self::from_reduced_parts(num, self.den.clone())
    }

    /// `a·r` for a signed integer `a`.
    pub fn scale_signed(&self, a: &BigInt) -> QmodZ {
        let s = self.scale(a.magnitude());
        if a.sign() == Sign::Minus {
            s.neg()
        } else {
            s
        }
    }

    /// All `s` with `n·s = r`, i.e. `(num + k·den)/(n·den)` for `k < n`,
    /// sorted by value.
    pub fn preimages(&self, n: u64) -> Vec<QmodZ> {
        assert!(n >= 1, "preimages need n >= 1");
        let big_den = &self.den * n;
        let mut out: Vec<QmodZ> = (0..n)
            .map(|k| Self::from_reduced_parts(&self.num + &self.den * k, big_den.clone()))
            .collect();
        out.sort_by(|x, y| x.cmp_value(y));
        out
    }

    /// Compares the representatives in `[0, 1)` as rational numbers.
    pub fn cmp_value(&self, other: &QmodZ) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }

    /// Splits `r = r_p + r'` with `den(r_p)` a power of `p` and `den(r')`
    /// prime to `p`, by the Chinese remainder theorem.
    pub fn p_decompose(&self, p: u64) -> (QmodZ, QmodZ) {
        let (e, m) = split_prime_power(&self.den, p);
        let pk = num_traits::pow(BigUint::from(p), e as usize);
        // num = x·m + y·p^k (mod den)  =>  x = num·m⁻¹ mod p^k, y = num·(p^k)⁻¹ mod m
        let num = BigInt::from(self.num.clone());
        let m_inv = mod_inverse(&BigInt::from(m.clone()), &pk).expect("coprime");
        let pk_inv = mod_inverse(&BigInt::from(pk.clone()), &m).expect("coprime");
        let x = (self.num.clone() * m_inv) % &pk;
        let y = (num.magnitude() * pk_inv) % &m;
        (
            Self::from_reduced_parts(x, pk),
            Self::from_reduced_parts(y, m),
        )
    }

    /// True when `den | level`.
    pub fn divides_level(&self, level: &BigUint) -> bool {
        (level % &self.den).is_zero()
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn parse_fraction(s: &str, what: &'static str) -> Result<(BigInt, BigInt)> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| Error::parse(what, s))?;
    let d = BigInt::from_str(d).map_err(|_| Error::parse(what, s))?;
    Ok((n, d))
}

impl FromStr for QmodZ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = parse_fraction(s, "Q/Z label")?;
        QmodZ::new(n, d)
    }
}

/// A reduced positive rational `a/b`, the degree label of a crossed-product
/// monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PosRational {
    a: BigUint,
    b: BigUint,
}

impl PosRational {
    pub fn one() -> Self {
        PosRational {
            a: BigUint::one(),
            b: BigUint::one(),
        }
    }

    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_zero() || b.is_zero() {
            return Err(Error::invalid("degree labels must be positive"));
        }
        let g = a.gcd(&b);
        Ok(PosRational { a: a / &g, b: b / &g })
    }

    pub fn numer(&self) -> &BigUint {
        &self.a
    }

    pub fn denom(&self) -> &BigUint {
        &self.b
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_one()
    }

    pub fn mul(&self, other: &PosRational) -> PosRational {
        PosRational::new(&self.a * &other.a, &self.b * &other.b).expect("positive")
    }

    pub fn inv(&self) -> PosRational {
        PosRational {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

impl fmt::Display for PosRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl fmt::Debug for PosRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl FromStr for PosRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = parse_fraction(s, "degree label")?;
        match (n.to_biguint(), d.to_biguint()) {
            (Some(a), Some(b)) => PosRational::new(a, b),
            _ => Err(Error::parse("degree label", s)),
        }
    }
}
