use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{Coeff, QmodZ, Ring};
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;
use crate::sparse;

use super::padic::PAdicFrac;

/// Rejects rings whose characteristic is not `p`.
pub(crate) fn check_char(ring: &Ring, p: u64) -> Result<()> {
    if ring.characteristic() != p {
        return Err(ring.unsupported(
            "the characteristic-p algebras",
            &format!("the coefficient ring must have characteristic {p}"),
        ));
    }
    Ok(())
}

/// A finitely supported function on `S ∩ [0, 1)` under truncated
/// convolution: `δ_a ⋆ δ_b = δ_{a+b}`, and zero once `a + b ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpElem {
    p: u64,
    ring: Ring,
    terms: BTreeMap<PAdicFrac, Coeff>,
}

impl TpElem {
    pub fn zero(ring: &Ring, p: u64) -> Result<Self> {
        check_char(ring, p)?;
        Ok(TpElem {
            p,
            ring: ring.clone(),
            terms: BTreeMap::new(),
        })
    }

    pub fn one(ring: &Ring, p: u64) -> Result<Self> {
        Self::delta(ring, p, PAdicFrac::zero())
    }

    pub fn delta(ring: &Ring, p: u64, a: PAdicFrac) -> Result<Self> {
        Self::from_terms(ring, p, [(a, ring.one())])
    }

    pub fn from_terms(ring: &Ring, p: u64, terms: impl IntoIterator<Item = (PAdicFrac, Coeff)>) -> Result<Self> {
        check_char(ring, p)?;
        Ok(TpElem {
            p,
            ring: ring.clone(),
            terms: sparse::collect(ring, terms),
        })
    }

    fn with_terms(&self, terms: BTreeMap<PAdicFrac, Coeff>) -> Self {
        TpElem {
            p: self.p,
            ring: self.ring.clone(),
            terms,
        }
    }

    fn collect_like(&self, terms: impl IntoIterator<Item = (PAdicFrac, Coeff)>) -> Self {
        self.with_terms(sparse::collect(&self.ring, terms))
    }

    /// `τ_m = ρ̃_p^m(1) = δ_{(p^m−1)/p^m}`.
    pub fn tau(ring: &Ring, p: u64, m: u32) -> Result<Self> {
        Self::delta(ring, p, PAdicFrac::top(p, m))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PAdicFrac, &Coeff)> {
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

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        self.ring.expect_same(&other.ring)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_terms(sparse::combine(&self.ring, &self.terms, &other.terms, false)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_terms(sparse::combine(&self.ring, &self.terms, &other.terms, true)))
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.from_i64(-1))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        self.with_terms(sparse::scale(&self.ring, &self.terms, c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if let Some(out) = self.mul_dense(other) {
            return Ok(out);
        }
        let mut out = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                if let Some(s) = a.add(b) {
                    sparse::accumulate(&mut out, &self.ring, s, self.ring.mul(c, d));
                }
            }
        }
        Ok(self.with_terms(out))
    }

    /// The same convolution on integer numerators over a common denominator
    /// `p^L`, used when `p^L` is small.
    fn mul_dense(&self, other: &Self) -> Option<Self> {
        const LIMIT: u64 = 1 << 20;
        let level = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .map(|a| a.level(self.p))
            .max()
            .unwrap_or(0);
        let size = self.p.checked_pow(level).filter(|&n| n <= LIMIT)?;
        let numerators = |x: &Self| -> Vec<(usize, Coeff)> {
            x.terms
                .iter()
                .map(|(a, c)| {
                    let scale = size / u64::try_from(a.den()).expect("small");
                    let k = u64::try_from(a.num()).expect("small") * scale;
                    (k as usize, c.clone())
                })
                .collect()
        };
        let (xs, ys) = (numerators(self), numerators(other));
        let mut acc: Vec<Option<Coeff>> = vec![None; size as usize];
        for (i, c) in &xs {
            for (j, d) in &ys {
                let s = i + j;
                if s >= size as usize {
                    continue;
                }
                let prod = self.ring.mul(c, d);
                acc[s] = Some(match acc[s].take() {
                    Some(prev) => self.ring.add(&prev, &prod),
                    None => prod,
                });
            }
        }
        let terms = acc.into_iter().enumerate().filter_map(|(k, c)| {
            c.map(|c| (PAdicFrac::new(k as u64, self.p, level).expect("below one"), c))
        });
        Some(self.collect_like(terms))
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut result = Self::one(&self.ring, self.p).expect("checked ring");
        for _ in 0..exp {
            if result.is_zero() {
                break;
            }
            result = result.mul(self).expect("same ring");
        }
        result
    }

    /// `σ_p(f)(a) = f(a/p)`, i.e. `δ_a ↦ δ_{pa}`.
    pub fn sigma(&self) -> Self {
        self.sigma_pow(1)
    }

    pub fn sigma_pow(&self, j: u32) -> Self {
        self.collect_like(
            self.terms
                .iter()
                .filter_map(|(a, c)| a.times_p_pow(self.p, j).map(|b| (b, c.clone()))),
        )
    }

    /// `ρ̃_p(f)(a) = f(pa − (p − 1))`, i.e. `δ_a ↦ δ_{(a+p−1)/p}`.
    pub fn rho(&self) -> Self {
        self.rho_pow(1)
    }

    pub fn rho_pow(&self, j: u32) -> Self {
        self.collect_like(
            self.terms
                .iter()
                .map(|(a, c)| (a.alpha_pow(self.p, j), c.clone())),
        )
    }

    /// True when `f` vanishes on `[0, 1/p)`, the kernel of `σ_p`.
    pub fn in_ker_sigma(&self) -> bool {
        self.terms.keys().all(|a| !a.below_inverse_p(self.p))
    }

    /// For members of `Ker σ_p`, whether `f^p = 0`; `None` for non-members.
    pub fn ker_sigma_nilpotency(&self) -> Option<bool> {
        if !self.in_ker_sigma() {
            return None;
        }
        Some(self.pow(self.p).is_zero())
    }

    /// `ι⁻¹`: `δ_{j/p^ℓ} ↦ (1 − e(1/p^ℓ))^j`.
    pub fn iota_inv(&self) -> GroupRingElem {
        let items = self.terms.iter().map(|(a, c)| (a.num(), a.den(), c));
        if let Some((den, dense)) = binomial_transform_dense(&self.ring, self.p, items) {
            let terms = dense
                .into_iter()
                .map(|(i, c)| (QmodZ::new(i, den).expect("positive"), c));
            return GroupRingElem::from_terms(&self.ring, terms.collect::<Vec<_>>());
        }
        let mut out = BTreeMap::new();
        for (a, c) in &self.terms {
            let den = a.den();
            for (i, b) in signed_binomials_mod_p(a.num(), self.p) {
                let label = QmodZ::new(BigInt::from(i), BigInt::from(den.clone())).expect("positive");
                let coeff = self.ring.mul(c, &self.ring.from_bigint(&b));
                sparse::accumulate(&mut out, &self.ring, label, coeff);
            }
        }
        GroupRingElem::from_terms(&self.ring, out)
    }

    pub fn to_text(&self) -> String {
        sparse::format_sum(
            &self.ring,
            self.terms.iter().map(|(a, c)| {
                let mono = if a.is_zero() {
                    String::new()
                } else {
                    format!("delta({a})")
                };
                (mono, c)
            }),
        )
    }
}

impl fmt::Display for TpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The pairs `(j, (−1)^j·C(k, j) mod p)` with nonzero value. By Lucas'
/// theorem `C(k, j) ≢ 0` exactly when every base-`p` digit of `j` is at
/// most the matching digit of `k`, and the residue is the product of the
/// digitwise binomials.
fn signed_binomials_mod_p(k: &BigUint, p: u64) -> Vec<(BigUint, BigInt)> {
    let pb = BigUint::from(p);
    let mut digits = Vec::new();
    let mut rest = k.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&pb);
        digits.push(u64::try_from(r).expect("digit below p"));
        rest = q;
    }
    let mut out = vec![(BigUint::zero(), BigUint::one())];
    let mut place = BigUint::one();
    for &d in &digits {
        let row = binomial_row(d);
        let mut next = Vec::with_capacity(out.len() * (d as usize + 1));
        for (j, v) in &out {
            for (i, c) in row.iter().enumerate() {
                let value = (v * c) % &pb;
                if !value.is_zero() {
                    next.push((j + &place * i, value));
                }
            }
        }
        out = next;
        place *= &pb;
    }
    out.into_iter()
        .map(|(j, v)| {
            let v = BigInt::from(v);
            let signed = if j.is_odd() { -v } else { v };
            (j, signed)
        })
        .collect()
}

/// Largest common denominator handled by the dense binomial transform.
const DENSE_LIMIT: u64 = 1 << 20;

/// Primes up to here keep every digit binomial `C(d, i)`, `d < p`, inside `u128`.
const SMALL_PRIME: u64 = 97;

/// `Σ c·(−1)^j C(k, j)·[j/d]` over the terms `c·[k/d]`, computed on a dense
/// grid with machine integers. Returns the common denominator and the
/// nonzero numerators, or `None` when the denominators are too large.
fn binomial_transform_dense<'a>(
    ring: &Ring,
    p: u64,
    items: impl IntoIterator<Item = (&'a BigUint, &'a BigUint, &'a Coeff)>,
) -> Option<(u64, Vec<(u64, Coeff)>)> {
    if p > SMALL_PRIME {
        return None;
    }
    let items: Vec<_> = items.into_iter().collect();
    let mut den = 1u64;
    for (_, d, _) in &items {
        den = den.max(u64::try_from(*d).ok()?);
    }
    if den > DENSE_LIMIT {
        return None;
    }
    let mut grid: Vec<Option<Coeff>> = vec![None; den as usize];
    for (k, d, c) in items {
        let (k, d) = (u64::try_from(k).ok()?, u64::try_from(d).ok()?);
        let scale = den / d;
        for (j, b) in signed_binomials_u64(k, p) {
            let add = ring.mul(c, &ring.from_i64(b));
            let slot = &mut grid[(j * scale) as usize];
            *slot = Some(match slot.take() {
                Some(old) => ring.add(&old, &add),
                None => add,
            });
        }
    }
    let out = grid
        .into_iter()
        .enumerate()
        .filter_map(|(i, c)| c.filter(|c| !ring.is_zero(c)).map(|c| (i as u64, c)))
        .collect();
    Some((den, out))
}

/// [`signed_binomials_mod_p`] for machine-sized `k`.
fn signed_binomials_u64(k: u64, p: u64) -> Vec<(u64, i64)> {
    let mut out = vec![(0u64, 1u64)];
    let (mut rest, mut place) = (k, 1u64);
    while rest > 0 {
        let d = rest % p;
        let mut next = Vec::with_capacity(out.len() * (d as usize + 1));
        let mut c = 1u128;
        for i in 0..=d {
            if i > 0 {
                c = c * (d - i + 1) as u128 / i as u128;
            }
            let cp = (c % p as u128) as u64;
            for &(j, v) in &out {
                let value = v * cp % p;
                if value != 0 {
                    next.push((j + place * i, value));
                }
            }
        }
        out = next;
        rest /= p;
        place = place.saturating_mul(p);
    }
    out.into_iter()
        .map(|(j, v)| (j, if j % 2 == 1 { -(v as i64) } else { v as i64 }))
        .collect()
}

/// `C(n, 0), …, C(n, n)`.
fn binomial_row(n: u64) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for i in 0..n {
        let next = row[i as usize].clone() * (n - i) / (i + 1);
        row.push(next);
    }
    row
}

/// `ι`: the isomorphism from the `p`-power part of the group ring, fixed by
/// `e(1/p^ℓ) ↦ δ_0 − δ_{p^{-ℓ}}`. On `e(k/p^ℓ)` this is the `k`-th power,
/// expanded binomially.
pub fn iota(x: &GroupRingElem, p: u64) -> Result<TpElem> {
    let ring = x.ring();
    check_char(ring, p)?;
    for (r, _) in x.terms() {
        PAdicFrac::from_qmodz(r, p)?;
    }
    if let Some((den, dense)) = binomial_transform_dense(ring, p, x.terms().map(|(r, c)| (r.num(), r.den(), c))) {
        let level = den.ilog(p);
        let terms = dense
            .into_iter()
            .map(|(j, c)| (PAdicFrac::new(j, p, level).expect("below one"), c));
        return TpElem::from_terms(ring, p, terms.collect::<Vec<_>>());
    }
    let mut out = BTreeMap::new();
    for (r, c) in x.terms() {
        for (j, b) in signed_binomials_mod_p(r.num(), p) {
            let a = PAdicFrac::from_qmodz(
                &QmodZ::new(BigInt::from(j), BigInt::from(r.den().clone()))?,
                p,
            )?;
            sparse::accumulate(&mut out, ring, a, ring.mul(c, &ring.from_bigint(&b)));
        }
    }
    TpElem::from_terms(ring, p, out)
}

/// The relations `τ_mτ_n = 0`, `ρ̃_p^m(τ_n) = τ_{m+n}` and `σ_p(τ_n) = 0`
/// for `1 ≤ m, n ≤ max`, plus `ρ̃_p^m(τ_0) = τ_m`.
pub fn tau_relations_hold(ring: &Ring, p: u64, max: u32) -> Result<bool> {
    for n in 1..=max {
        let tn = TpElem::tau(ring, p, n)?;
        if !tn.sigma().is_zero() {
            return Ok(false);
        }
        for m in 0..=max {
            if tn.rho_pow(m) != TpElem::tau(ring, p, m + n)? {
                return Ok(false);
            }
            if m >= 1 && !TpElem::tau(ring, p, m)?.mul(&tn)?.is_zero() {
                return Ok(false);
            }
        }
    }
    for m in 0..=max {
        if TpElem::one(ring, p)?.rho_pow(m) != TpElem::tau(ring, p, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(ring: &Ring, p: u64, k: u32, n: u32) -> TpElem {
        TpElem::delta(ring, p, PAdicFrac::new(k, p, n).unwrap()).unwrap()
    }

    #[test]
    fn machine_binomials_agree() {
        for p in [2u64, 3, 5, 7] {
            for k in 0..400u64 {
                let mut big: Vec<(u64, i64)> = signed_binomials_mod_p(&BigUint::from(k), p)
                    .into_iter()
                    .map(|(j, v)| (u64::try_from(j).unwrap(), i64::try_from(v).unwrap()))
                    .collect();
                let mut small = signed_binomials_u64(k, p);
                big.sort();
                small.sort();
                assert_eq!(small, big, "k = {k}, p = {p}");
            }
        }
    }

    #[test]
    fn convolution_examples() {
        let f3 = Ring::PrimeField(3);
        assert_eq!(d(&f3, 3, 1, 1).mul(&d(&f3, 3, 1, 1)).unwrap(), d(&f3, 3, 2, 1));
        assert!(d(&f3, 3, 2, 1).mul(&d(&f3, 3, 2, 1)).unwrap().is_zero());
        let f2 = Ring::PrimeField(2);
        let x = d(&f2, 2, 0, 0).add(&d(&f2, 2, 1, 1)).unwrap();
        assert_eq!(x.mul(&x).unwrap(), TpElem::one(&f2, 2).unwrap());
        assert!(TpElem::one(&Ring::Integers, 2).is_err());
        assert!(matches!(
            d(&f2, 2, 1, 1).mul(&TpElem::one(&f3, 3).unwrap()),
            Err(Error::PrimeMismatch(2, 3))
        ));
    }

    #[test]
    fn iota_examples() {
        let f2 = Ring::PrimeField(2);
        let half = GroupRingElem::e(&f2, QmodZ::of(1, 2));
        let expected = d(&f2, 2, 0, 0).add(&d(&f2, 2, 1, 1)).unwrap();
        assert_eq!(iota(&half, 2).unwrap(), expected);
        let quarter = iota(&GroupRingElem::e(&f2, QmodZ::of(1, 4)), 2).unwrap();
        assert_eq!(quarter.mul(&quarter).unwrap(), expected);
        for p in [2u64, 3, 5] {
            let fp = Ring::PrimeField(p);
            let pt = GroupRingElem::one(&fp).rho_tilde(p);
            assert_eq!(iota(&pt, p).unwrap(), d(&fp, p, p as u32 - 1, 1));
        }
        assert!(iota(&GroupRingElem::e(&f2, QmodZ::of(1, 3)), 2).is_err());
    }

    #[test]
    fn iota_matches_convolution_powers() {
        let f3 = Ring::PrimeField(3);
        for l in 1..=2u32 {
            let den = 3i64.pow(l);
            let gen = iota(&GroupRingElem::e(&f3, QmodZ::of(1, den)), 3).unwrap();
            for k in 0..den {
                let direct = iota(&GroupRingElem::e(&f3, QmodZ::of(k, den)), 3).unwrap();
                assert_eq!(direct, gen.pow(k as u64), "k={k}/{den}");
                assert_eq!(direct.iota_inv(), GroupRingElem::e(&f3, QmodZ::of(k, den)));
            }
        }
    }

    #[test]
    fn sigma_rho_examples() {
        let f2 = Ring::PrimeField(2);
        assert_eq!(d(&f2, 2, 1, 2).sigma(), d(&f2, 2, 1, 1));
        let f3 = Ring::PrimeField(3);
        assert!(d(&f3, 3, 2, 1).sigma().is_zero());
        assert_eq!(TpElem::one(&f2, 2).unwrap().rho(), d(&f2, 2, 1, 1));
    }

    #[test]
    fn kernel_nilpotency() {
        let f2 = Ring::PrimeField(2);
        assert_eq!(d(&f2, 2, 1, 1).ker_sigma_nilpotency(), Some(true));
        assert_eq!(TpElem::one(&f2, 2).unwrap().ker_sigma_nilpotency(), None);
        let f3 = Ring::PrimeField(3);
        let x = d(&f3, 3, 2, 1).add(&d(&f3, 3, 8, 2)).unwrap();
        assert_eq!(x.ker_sigma_nilpotency(), Some(true));
    }

    #[test]
    fn tau_examples() {
        let f2 = Ring::PrimeField(2);
        let t1 = TpElem::tau(&f2, 2, 1).unwrap();
        assert_eq!(t1, d(&f2, 2, 1, 1));
        assert!(t1.mul(&t1).unwrap().is_zero());
        assert_eq!(t1.rho(), d(&f2, 2, 3, 2));
        for p in [2, 3, 5] {
            assert!(tau_relations_hold(&Ring::PrimeField(p), p, 5).unwrap());
        }
    }
}
