//! The ν-presentation of the crossed product and its two comparison maps:
//! the coefficient-preserving isomorphism `φ` (which does not respect the
//! involutions) and the rescaled `ψ` over `Q(√·)` (which does).

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{Coeff, PosRational, QmodZ, Ring};
use crate::bc::{BcElem, BcKey};
use crate::error::Result;
use crate::group_ring::GroupRingElem;

/// An element written in the basis `ν_a e(r) ν*_b`, `gcd(a, b) = 1`.
///
/// The labels and coefficients are those of the image under `φ`, so the
/// stored `BcElem` is literally `φ(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElem {
    inner: BcElem,
}

impl HeckeElem {
    pub fn zero(ring: &Ring) -> Self {
        Self::phi_inv(&BcElem::zero(ring))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::phi_inv(&BcElem::one(ring))
    }

    pub fn nu(ring: &Ring, n: impl Into<BigUint>) -> Result<Self> {
        Ok(Self::phi_inv(&BcElem::mu_tilde(ring, n)?))
    }

    pub fn nu_star(ring: &Ring, n: impl Into<BigUint>) -> Result<Self> {
        Ok(Self::phi_inv(&BcElem::mu_star(ring, n)?))
    }

    pub fn e(ring: &Ring, r: QmodZ) -> Self {
        Self::phi_inv(&BcElem::e(ring, r))
    }

    pub fn embed_gr(x: &GroupRingElem) -> Self {
        Self::phi_inv(&BcElem::embed_gr(x))
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (BcKey, Coeff)>) -> Self {
        Self::phi_inv(&BcElem::from_terms(ring, terms))
    }

    /// `ν_a ↦ μ̃_a`, `ν*_b ↦ μ*_b`, identity on `e(r)`.
    pub fn phi(&self) -> BcElem {
        self.inner.clone()
    }

    pub fn phi_inv(x: &BcElem) -> Self {
        HeckeElem { inner: x.clone() }
    }

    pub fn ring(&self) -> &Ring {
        self.inner.ring()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BcKey, &Coeff)> {
        self.inner.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::phi_inv(&self.inner.add(&other.inner)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self::phi_inv(&self.inner.sub(&other.inner)?))
    }

    pub fn neg(&self) -> Self {
        Self::phi_inv(&self.inner.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::phi_inv(&self.inner.scale(c))
    }

    /// Transported multiplication `φ⁻¹(φ(x)·φ(y))`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::phi_inv(&self.phi().mul(&other.phi())?))
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self::phi_inv(&self.inner.pow(exp))
    }

    pub fn change_ring(&self, ring: &Ring) -> Result<Self> {
        Ok(Self::phi_inv(&self.inner.change_ring(ring)?))
    }

    /// `(ν_a e(r) ν*_b)* = ν_b e(−r) ν*_a`, with trivial conjugation.
    pub fn star(&self) -> Result<Self> {
        let ring = self.ring();
        if !matches!(ring, Ring::Rationals | Ring::SqrtRationals) {
            return Err(ring.unsupported("star", "the involution needs division by integers"));
        }
        Ok(Self::from_terms(
            ring,
            self.terms()
                .map(|(k, c)| (BcKey::new(k.r.neg(), k.deg.inv()), c.clone())),
        ))
    }

    /// `ψ(ν_n) = n^{-1/2}·μ̃_n`, `ψ(ν*_n) = n^{1/2}·μ*_n`, identity on `e(r)`.
    pub fn psi(&self) -> Result<BcElem> {
        root_rescale(&self.inner, "psi")
    }

    pub fn to_text(&self) -> String {
        self.inner.to_text_with(|k| {
            let mut parts = Vec::new();
            if !k.deg.numer().is_one() {
                parts.push(format!("nu({})", k.deg.numer()));
            }
            if !k.r.is_zero() {
                parts.push(format!("e({})", k.r));
            }
            if !k.deg.denom().is_one() {
                parts.push(format!("nu*({})", k.deg.denom()));
            }
            parts.join("*")
        })
    }
}

impl fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Scales the monomial of degree `a/b` by `a^{-1/2}·b^{1/2} = √a·√b / a`.
fn root_rescale(x: &BcElem, op: &str) -> Result<BcElem> {
    let ring = x.ring();
    if *ring != Ring::SqrtRationals {
        return Err(ring.unsupported(op, "square roots need the qsqrt coefficient ring"));
    }
    let mut terms = Vec::new();
    for (k, c) in x.terms() {
        terms.push((k.clone(), ring.mul(c, &root_factor(ring, &k.deg)?)));
    }
    Ok(BcElem::from_terms(ring, terms))
}

fn root_factor(ring: &Ring, deg: &PosRational) -> Result<Coeff> {
    let (a, b) = (deg.numer(), deg.denom());
    let roots = ring.mul(&ring.sqrt(a)?, &ring.sqrt(b)?);
    let inv_a = ring.int_inverse(a).expect("rational ring");
    Ok(ring.mul(&roots, &inv_a))
}

/// The scaling `σ_{i/2}`: `μ̃_n ↦ n^{-1/2}·μ̃_n`, `μ*_n ↦ n^{1/2}·μ*_n`.
pub fn sigma_i_half(x: &BcElem) -> Result<BcElem> {
    root_rescale(x, "sigma_i_half")
}

/// A witness that `φ` does not intertwine the involutions: returns
/// `(w, φ(w*), φ(w)*)`.
pub fn involution_mismatch(w: &HeckeElem) -> Result<(HeckeElem, BcElem, BcElem)> {
    let left = w.star()?.phi();
    let right = w.phi().star()?;
    Ok((w.clone(), left, right))
}

/// The standard witness `ν_2` over `Q`.
pub fn default_mismatch_witness() -> (HeckeElem, BcElem, BcElem) {
    let w = HeckeElem::nu(&Ring::Rationals, 2u32).expect("positive");
    involution_mismatch(&w).expect("rational ring")
}
