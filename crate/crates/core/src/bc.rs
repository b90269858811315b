//! The integral crossed product `Z[Q/Z] ⋊ N` in its normal-form basis
//! `μ̃_a e(r) μ*_b`, `gcd(a, b) = 1`, together with its regular
//! representation on `E = Z[Q/Z × Q*₊]` and the θ-representation on the
//! group ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::numtheory::materializable;
use crate::arith::{Coeff, PosRational, QmodZ, Ring};
use crate::error::Result;
use crate::group_ring::GroupRingElem;
use crate::sparse;

/// The label `(r, a/b)` of the monomial `μ̃_a e(r) μ*_b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BcKey {
    pub r: QmodZ,
    pub deg: PosRational,
}

impl BcKey {
    pub fn new(r: QmodZ, deg: PosRational) -> Self {
        BcKey { r, deg }
    }

    pub fn unit() -> Self {
        BcKey::new(QmodZ::zero(), PosRational::one())
    }
}

impl Ord for BcKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .denom()
            .cmp(other.deg.denom())
            .then_with(|| self.deg.numer().cmp(other.deg.numer()))
            .then_with(|| self.r.cmp(&other.r))
    }
}

impl PartialOrd for BcKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The product of two basis monomials: an integer multiplicity and the
/// resulting basis keys, each with coefficient one.
pub fn monomial_product(x: &BcKey, y: &BcKey) -> (BigUint, Vec<BcKey>) {
    let (a, b) = (x.deg.numer(), x.deg.denom());
    let (c, d) = (y.deg.numer(), y.deg.denom());
    // μ*_b μ̃_c = n·μ̃_{c'} μ*_{b'}, then move e(·) past the inner μ's.
    let n = b.gcd(c);
    let b1 = b / &n;
    let c1 = c / &n;
    let z = x.r.scale(&c1).add(&y.r.scale(&b1));
    // μ̃_{ac'} z μ*_{b'd} with the common part m collapsed to ρ̃_m(z)
    let ac = a * &c1;
    let bd = &b1 * d;
    let m = ac.gcd(&bd);
    let deg = PosRational::new(&ac / &m, &bd / &m).expect("positive");
    let keys = z
        .preimages(materializable(&m))
        .into_iter()
        .map(|t| BcKey::new(t, deg.clone()))
        .collect();
    (n, keys)
}

fn text_of_monomial(key: &BcKey) -> String {
    let mut parts = Vec::new();
    if !key.deg.numer().is_one() {
        parts.push(format!("mu~({})", key.deg.numer()));
    }
    if !key.r.is_zero() {
        parts.push(format!("e({})", key.r));
    }
    if !key.deg.denom().is_one() {
        parts.push(format!("mu*({})", key.deg.denom()));
    }
    parts.join("*")
}

/// An element of the crossed product over a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcElem {
    ring: Ring,
    terms: BTreeMap<BcKey, Coeff>,
}

impl BcElem {
    pub fn zero(ring: &Ring) -> Self {
        BcElem {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_terms(ring, [(BcKey::unit(), ring.one())])
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (BcKey, Coeff)>) -> Self {
        BcElem {
            ring: ring.clone(),
            terms: sparse::collect(ring, terms),
        }
    }

    /// `c·μ̃_a e(r) μ*_b`; `a/b` is reduced first.
    pub fn monomial(ring: &Ring, a: impl Into<BigUint>, r: QmodZ, b: impl Into<BigUint>, c: Coeff) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        let g = a.gcd(&b);
        if !g.is_one() {
            // μ̃_a μ*_b is not a basis element when gcd(a, b) > 1; build the product instead.
            let left = Self::from_terms(ring, [(BcKey::new(QmodZ::zero(), PosRational::new(a, 1u32)?), ring.one())]);
            let mid = Self::from_terms(ring, [(BcKey::new(r, PosRational::one()), c)]);
            let right = Self::mu_star(ring, b)?;
            return left.mul(&mid)?.mul(&right);
        }
        Ok(Self::from_terms(ring, [(BcKey::new(r, PosRational::new(a, b)?), c)]))
    }

    pub fn mu_tilde(ring: &Ring, n: impl Into<BigUint>) -> Result<Self> {
        let deg = PosRational::new(n, 1u32)?;
        Ok(Self::from_terms(ring, [(BcKey::new(QmodZ::zero(), deg), ring.one())]))
    }

    pub fn mu_star(ring: &Ring, n: impl Into<BigUint>) -> Result<Self> {
        let deg = PosRational::new(1u32, n)?;
        Ok(Self::from_terms(ring, [(BcKey::new(QmodZ::zero(), deg), ring.one())]))
    }

    pub fn e(ring: &Ring, r: QmodZ) -> Self {
        Self::from_terms(ring, [(BcKey::new(r, PosRational::one()), ring.one())])
    }

    /// The embedding of the abelian part.
    pub fn embed_gr(x: &GroupRingElem) -> Self {
        Self::from_terms(
            x.ring(),
            x.terms()
                .map(|(r, c)| (BcKey::new(r.clone(), PosRational::one()), c.clone())),
        )
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::from_terms(ring, [(BcKey::unit(), c)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BcKey, &Coeff)> {
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

    pub fn coeff(&self, key: &BcKey) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// True when every term has degree `1/1`.
    pub fn is_abelian(&self) -> bool {
        self.terms.keys().all(|k| k.deg.is_one())
    }

    /// The element as a group-ring element, if it is abelian.
    pub fn abelian_part(&self) -> Option<GroupRingElem> {
        if !self.is_abelian() {
            return None;
        }
        Some(GroupRingElem::from_terms(
            &self.ring,
            self.terms.iter().map(|(k, c)| (k.r.clone(), c.clone())),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.expect_same(&other.ring)?;
        Ok(BcElem {
            ring: self.ring.clone(),
            terms: sparse::combine(&self.ring, &self.terms, &other.terms, false),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ring.expect_same(&other.ring)?;
        Ok(BcElem {
            ring: self.ring.clone(),
            terms: sparse::combine(&self.ring, &self.terms, &other.terms, true),
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.from_i64(-1))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        BcElem {
            ring: self.ring.clone(),
            terms: sparse::scale(&self.ring, &self.terms, c),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.expect_same(&other.ring)?;
        let mut out = BTreeMap::new();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let (n, keys) = monomial_product(x, y);
                let c = self.ring.mul_int(&self.ring.mul(cx, cy), &n);
                if self.ring.is_zero(&c) {
                    continue;
                }
                for k in keys {
                    sparse::accumulate(&mut out, &self.ring, k, c.clone());
                }
            }
        }
        Ok(BcElem {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut result = Self::one(&self.ring);
        for _ in 0..exp {
            result = result.mul(self).expect("same ring");
        }
        result
    }

    /// The involution `(μ̃_a e(r) μ*_b)* = (a/b)·μ̃_b e(−r) μ*_a`. Every
    /// supported coefficient is real, so conjugation is trivial.
    pub fn star(&self) -> Result<Self> {
        if !matches!(self.ring, Ring::Rationals | Ring::SqrtRationals) {
            return Err(self
                .ring
                .unsupported("star", "the involution needs division by integers"));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            let q = BigRational::new(k.deg.numer().clone().into(), k.deg.denom().clone().into());
            let factor = self.ring.from_rational(&q)?;
            terms.push((BcKey::new(k.r.neg(), k.deg.inv()), self.ring.mul(c, &factor)));
        }
        Ok(Self::from_terms(&self.ring, terms))
    }

    /// The action on `E`, composed from the rules for `μ*_b`, `e(r)`, `μ̃_a`.
    pub fn act(&self, v: &EElem) -> Result<EElem> {
        self.ring.expect_same(&v.ring)?;
        let mut out = BTreeMap::new();
        for (x, cx) in &self.terms {
            for (y, cy) in &v.terms {
                let c = self.ring.mul(cx, cy);
                for (key, n) in act_monomial(x, y) {
                    sparse::accumulate(&mut out, &self.ring, key, self.ring.mul_int(&c, &n));
                }
            }
        }
        Ok(EElem {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    /// `x·ξ(1, 1)`.
    pub fn normal_coords(&self) -> EElem {
        self.act(&EElem::xi_one(&self.ring)).expect("same ring")
    }

    /// The θ-representation: `μ̃_a e(r) μ*_b` acts by `ξ ↦ ρ̃_a(e(r)·σ_b(ξ))`.
    pub fn theta(&self, xi: &GroupRingElem) -> Result<GroupRingElem> {
        self.ring.expect_same(xi.ring())?;
        let mut out = GroupRingElem::zero(&self.ring);
        for (k, c) in &self.terms {
            let shifted = GroupRingElem::monomial(&self.ring, k.r.clone(), c.clone())
                .mul(&xi.sigma(k.deg.denom().clone()))?;
            let image = shifted.rho_tilde(materializable(k.deg.numer()));
            out = out.add(&image)?;
        }
        Ok(out)
    }

    /// Base change of an integral element.
    pub fn change_ring(&self, ring: &Ring) -> Result<Self> {
        if *ring == self.ring {
            return Ok(self.clone());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            terms.push((k.clone(), ring.from_integer_coeff(c)?));
        }
        Ok(Self::from_terms(ring, terms))
    }

    /// Text form with monomials written as `mu~(a)*e(r)*mu*(b)`.
    pub fn to_text(&self) -> String {
        self.to_text_with(text_of_monomial)
    }

    pub(crate) fn to_text_with(&self, mono: impl Fn(&BcKey) -> String) -> String {
        sparse::format_sum(&self.ring, self.terms.iter().map(|(k, c)| (mono(k), c)))
    }
}

impl fmt::Display for BcElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `μ̃_a e(r) μ*_b · ξ(e(t), c/d)` as a list of `(key, multiplicity)`.
fn act_monomial(x: &BcKey, v: &BcKey) -> Vec<(BcKey, BigUint)> {
    let (a, b) = (x.deg.numer(), x.deg.denom());
    // μ*_b ξ(y, c/d) = gcd(b,c)·ξ(σ_{b/n}(y), c/(bd))
    let n = b.gcd(v.deg.numer());
    let t = v.r.scale(&(b / &n));
    let deg = v.deg.mul(&PosRational::new(1u32, b.clone()).expect("positive"));
    // e(r) ξ(e(t), c/d) = ξ(e(cr + t), c/d)
    let t = x.r.scale(deg.numer()).add(&t);
    // μ̃_a ξ(y, c/d) = ξ(ρ̃_m(y), ac/d), m = gcd(a, d)
    let m = a.gcd(deg.denom());
    let deg = deg.mul(&PosRational::new(a.clone(), 1u32).expect("positive"));
    t.preimages(materializable(&m))
        .into_iter()
        .map(|s| (BcKey::new(s, deg.clone()), n.clone()))
        .collect()
}

/// An element of `E`: the term `(t, c/d)` stands for `ξ(e(t), c/d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EElem {
    ring: Ring,
    terms: BTreeMap<BcKey, Coeff>,
}

impl EElem {
    pub fn zero(ring: &Ring) -> Self {
        EElem {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `ξ(1, 1)`.
    pub fn xi_one(ring: &Ring) -> Self {
        Self::from_terms(ring, [(BcKey::unit(), ring.one())])
    }

    /// `ξ(e(t), c/d)`.
    pub fn xi(ring: &Ring, t: QmodZ, deg: PosRational) -> Self {
        Self::from_terms(ring, [(BcKey::new(t, deg), ring.one())])
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (BcKey, Coeff)>) -> Self {
        EElem {
            ring: ring.clone(),
            terms: sparse::collect(ring, terms),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BcKey, &Coeff)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.expect_same(&other.ring)?;
        Ok(EElem {
            ring: self.ring.clone(),
            terms: sparse::combine(&self.ring, &self.terms, &other.terms, false),
        })
    }

    /// Reads the coordinates `ξ(e(t), c/d) ↦ μ̃_c e(t) μ*_d`.
    pub fn to_bc(&self) -> BcElem {
        BcElem::from_terms(
            &self.ring,
            self.terms.iter().map(|(k, c)| (k.clone(), c.clone())),
        )
    }
}

impl fmt::Display for EElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = sparse::format_sum(
            &self.ring,
            self.terms.iter().map(|(k, c)| {
                let y = if k.r.is_zero() {
                    "1".to_string()
                } else {
                    format!("e({})", k.r)
                };
                (format!("xi({y}, {})", k.deg), c)
            }),
        );
        f.write_str(&text)
    }
}
