//! `F_{p^k}` in a polynomial basis: residues of `F_p[t]` modulo a monic
//! irreducible polynomial of degree `k`.

use std::fmt;

use num_bigint::BigUint;

use super::numtheory::is_prime;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtField {
    p: u64,
    k: usize,
    /// Monic, coefficients from the constant term up; length `k + 1`.
    modulus: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime: a^(p-2)
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = mul_mod(lead, c, p);
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

/// Every monic polynomial of degree `d` over `F_p`.
fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push(idx % p);
            idx /= p;
        }
        v.push(1);
        v
    })
}

/// Exhaustive factor search: no monic factor of degree `1..=k/2`.
pub fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let k = poly.len() - 1;
    if k == 0 {
        return false;
    }
    (1..=k / 2).all(|d| monic_polys(p, d).all(|f| !trim(poly_rem(poly, &f, p)).is_empty()))
}

impl ExtField {
    /// Builds `F_{p^k}`. Without an explicit modulus the defaults `t²+t+1`
    /// (F_4), `t³+t+1` (F_8), `t²+1` (F_9) are used, and otherwise the first
    /// irreducible monic polynomial in lexicographic order.
    pub fn new(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if k == 0 {
            return Err(Error::BadModulus("extension degree must be at least 1".into()));
        }
        let modulus = match modulus {
            Some(m) => {
                let m = trim(m.into_iter().map(|c| c % p).collect());
                if m.len() != k + 1 {
                    return Err(Error::BadModulus(format!(
                        "expected degree {k}, got degree {}",
                        m.len() as isize - 1
                    )));
                }
                let lead_inv = inv_mod(m[k], p);
                m.into_iter().map(|c| mul_mod(c, lead_inv, p)).collect()
            }
            None => match (p, k) {
                (2, 2) => vec![1, 1, 1],
                (2, 3) => vec![1, 1, 0, 1],
                (3, 2) => vec![1, 0, 1],
                _ => monic_polys(p, k)
                    .find(|f| is_irreducible(f, p))
                    .expect("irreducible polynomials exist in every degree"),
            },
        };
        if !is_irreducible(&modulus, p) {
            return Err(Error::BadModulus(format!(
                "{} is reducible over F_{p}",
                format_poly(&modulus, "t")
            )));
        }
        Ok(ExtField { p, k, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.p), self.k)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.k]
    }

    pub fn one(&self) -> Vec<u64> {
        self.from_int(1)
    }

    pub fn from_int(&self, n: u64) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = n % self.p;
        v
    }

    /// The class of `t`.
    pub fn generator(&self) -> Vec<u64> {
        self.reduce(&[0, 1])
    }

    /// Reduces an arbitrary coefficient list to a canonical residue.
    pub fn reduce(&self, poly: &[u64]) -> Vec<u64> {
        let reduced: Vec<u64> = poly.iter().map(|c| c % self.p).collect();
        let mut r = if reduced.len() > self.k {
            poly_rem(&reduced, &self.modulus, self.p)
        } else {
            reduced
        };
        r.resize(self.k, 0);
        r
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&x| (self.p - x) % self.p).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, self.p)) % self.p;
            }
        }
        self.reduce(&prod)
    }

    pub fn pow(&self, a: &[u64], exp: &BigUint) -> Vec<u64> {
        let mut result = self.one();
        let mut base = a.to_vec();
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

    /// `a^(p^l)`.
    pub fn frobenius(&self, a: &[u64], l: u64) -> Vec<u64> {
        let p = BigUint::from(self.p);
        let mut x = a.to_vec();
        for _ in 0..(l % self.k as u64) {
            x = self.pow(&x, &p);
        }
        x
    }

    /// Every field element, in counting order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let count = self.p.pow(self.k as u32);
        (0..count).map(move |mut idx| {
            (0..self.k)
                .map(|_| {
                    let c = idx % self.p;
                    idx /= self.p;
                    c
                })
                .collect()
        })
    }

    /// Parses a polynomial in `t` such as `t^2 + 2*t + 1`.
    pub fn parse_poly(s: &str, p: u64) -> Result<Vec<u64>> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("polynomial", s));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        for term in compact.split('+') {
            let bad = || Error::parse("polynomial", s);
            let (c, e) = match term.find('t') {
                None => (term.parse::<u64>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let head = term[..pos].trim_end_matches('*');
                    let c = if head.is_empty() {
                        1
                    } else {
                        head.parse::<u64>().map_err(|_| bad())?
                    };
                    let tail = &term[pos + 1..];
                    let e = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = (coeffs[e] + c % p) % p;
        }
        Ok(coeffs)
    }

    pub fn format_element(&self, a: &[u64]) -> String {
        format_poly(a, "t")
    }
}

/// Formats a coefficient list, highest degree first: `t^2 + t + 1`.
pub fn format_poly(coeffs: &[u64], var: &str) -> String {
    let mut parts = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        parts.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            (_, false) => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

impl fmt::Display for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_irreducible() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 3), (3, 4)] {
            let f = ExtField::new(p, k, None).unwrap();
            assert!(is_irreducible(f.modulus(), p));
            assert_eq!(f.modulus().len(), k + 1);
        }
        assert_eq!(ExtField::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(ExtField::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_reducible_and_nonprime() {
        // t^2 + 1 = (t + 1)^2 over F_2
        assert!(matches!(
            ExtField::new(2, 2, Some(vec![1, 0, 1])),
            Err(Error::BadModulus(_))
        ));
        // (t^2 + t + 1)^2 over F_2 has no roots but a quadratic factor
        assert!(ExtField::new(2, 4, Some(vec![1, 0, 1, 0, 1])).is_err());
        assert!(matches!(ExtField::new(4, 2, None), Err(Error::NotPrime(_))));
        assert!(ExtField::new(2, 2, Some(vec![1, 1])).is_err());
    }

    #[test]
    fn f4_frobenius() {
        let f = ExtField::new(2, 2, None).unwrap();
        let t = f.generator();
        assert_eq!(f.frobenius(&t, 1), vec![1, 1]);
        assert_eq!(f.frobenius(&f.zero(), 5), f.zero());
    }

    #[test]
    fn frobenius_k_is_identity() {
        for (p, k) in [(2, 2), (2, 3), (3, 2)] {
            let f = ExtField::new(p, k, None).unwrap();
            for x in f.elements() {
                assert_eq!(f.pow(&x, &f.order()), x);
                assert_eq!(f.frobenius(&x, k as u64), x);
            }
        }
    }

    #[test]
    fn nonzero_elements_are_invertible() {
        let f = ExtField::new(3, 2, None).unwrap();
        let q_minus_2 = f.order() - 2u32;
        for x in f.elements().filter(|x| !f.is_zero(x)) {
            let inv = f.pow(&x, &q_minus_2);
            assert_eq!(f.mul(&x, &inv), f.one());
        }
    }

    #[test]
    fn poly_parse_and_format() {
        assert_eq!(ExtField::parse_poly("t^2+t+1", 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(ExtField::parse_poly("2*t^3 + 1", 3).unwrap(), vec![1, 0, 0, 2]);
        assert_eq!(format_poly(&[1, 0, 1], "t"), "t^2 + 1");
        assert_eq!(format_poly(&[0, 2], "t"), "2*t");
        assert!(ExtField::parse_poly("t^", 2).is_err());
    }
}
