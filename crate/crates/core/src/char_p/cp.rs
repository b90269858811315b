use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Coeff, Ring};
use crate::error::{Error, Result};
use crate::sparse;

use super::padic::PAdicFrac;
use super::semigroup::GElem;
use super::tp::{check_char, TpElem};

/// `(k, a)` labels `μ̃_p^k δ_a` for `k ≥ 1` and `δ_a μ*_p^{−k}` for `k ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CpKey {
    pub k: i64,
    pub a: PAdicFrac,
}

impl CpKey {
    pub fn new(k: i64, a: PAdicFrac) -> Self {
        CpKey { k, a }
    }

    /// The exponents `(n, m)` of `μ̃_p^n δ_a μ*_p^m`; one of them is zero.
    pub fn exponents(&self) -> (u32, u32) {
        if self.k >= 1 {
            (self.k as u32, 0)
        } else {
            (0, (-self.k) as u32)
        }
    }

    fn from_exponents(n: u32, m: u32, a: PAdicFrac) -> Self {
        debug_assert!(n == 0 || m == 0);
        CpKey::new(n as i64 - m as i64, a)
    }

    /// The affine map `b ↦ p^n b + a` through which the monomial acts.
    pub fn to_affine(&self, p: u64) -> GElem {
        let (n, m) = self.exponents();
        if n == 0 {
            GElem::new(p, m as i64, self.a.to_rational())
        } else {
            // α^n(x + a) = (x + a)/p^n + 1 − p^{−n}
            let pn = num_rational::BigRational::from_integer(num_traits::pow(
                num_bigint::BigInt::from(p),
                n as usize,
            ));
            let one = num_rational::BigRational::from_integer(1.into());
            let shift = self.a.to_rational() / &pn + &one - one / &pn;
            GElem::new(p, -(n as i64), shift)
        }
    }

    /// `ξ_c ↦ ξ_{g(c)}`, or `None` when the image reaches one.
    pub fn act(&self, p: u64, c: &PAdicFrac) -> Option<PAdicFrac> {
        let (n, m) = self.exponents();
        if n == 0 {
            c.times_p_pow(p, m)?.add(&self.a)
        } else {
            Some(c.add(&self.a)?.alpha_pow(p, n))
        }
    }
}

/// Product of two basis monomials; `None` when it vanishes.
pub fn cp_monomial_product(p: u64, x: &CpKey, y: &CpKey) -> Option<CpKey> {
    let (n1, m1) = x.exponents();
    let (n2, m2) = y.exponents();
    if m1 > 0 && n2 > 0 {
        // μ*_p μ̃_p = p = 0
        return None;
    }
    if m1 > 0 {
        // δ_a μ*^{m1} δ_b μ*^{m2} = δ_a σ^{m1}(δ_b) μ*^{m1+m2}
        let b = y.a.times_p_pow(p, m1)?;
        return Some(CpKey::from_exponents(0, m1 + m2, x.a.add(&b)?));
    }
    if n2 > 0 {
        // μ̃^{n1} δ_a μ̃^{n2} δ_b = μ̃^{n1+n2} σ^{n2}(δ_a) δ_b
        let a = x.a.times_p_pow(p, n2)?;
        return Some(CpKey::from_exponents(n1 + n2, 0, a.add(&y.a)?));
    }
    // μ̃^{n1} (δ_a δ_b) μ*^{m2}
    let ab = x.a.add(&y.a)?;
    Some(if m2 >= n1 {
        CpKey::from_exponents(0, m2 - n1, ab.alpha_pow(p, n1))
    } else {
        CpKey::from_exponents(n1 - m2, 0, ab.alpha_pow(p, m2))
    })
}

/// An element of the crossed product `T(p) ⋊ p^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpElem {
    p: u64,
    ring: Ring,
    terms: BTreeMap<CpKey, Coeff>,
}

/// A sparse vector in the span of the `ξ_c`.
pub type XiVector = BTreeMap<PAdicFrac, Coeff>;

impl CpElem {
    pub fn zero(ring: &Ring, p: u64) -> Result<Self> {
        Self::from_terms(ring, p, [])
    }

    pub fn one(ring: &Ring, p: u64) -> Result<Self> {
        Self::from_terms(ring, p, [(CpKey::new(0, PAdicFrac::zero()), ring.one())])
    }

    pub fn from_terms(ring: &Ring, p: u64, terms: impl IntoIterator<Item = (CpKey, Coeff)>) -> Result<Self> {
        check_char(ring, p)?;
        Ok(CpElem {
            p,
            ring: ring.clone(),
            terms: sparse::collect(ring, terms),
        })
    }

    pub fn monomial(ring: &Ring, p: u64, key: CpKey) -> Result<Self> {
        Self::from_terms(ring, p, [(key, ring.one())])
    }

    pub fn delta(ring: &Ring, p: u64, a: PAdicFrac) -> Result<Self> {
        Self::monomial(ring, p, CpKey::new(0, a))
    }

    pub fn mu_tilde(ring: &Ring, p: u64) -> Result<Self> {
        Self::monomial(ring, p, CpKey::new(1, PAdicFrac::zero()))
    }

    pub fn mu_star(ring: &Ring, p: u64) -> Result<Self> {
        Self::monomial(ring, p, CpKey::new(-1, PAdicFrac::zero()))
    }

    pub fn from_tp(x: &TpElem) -> Self {
        CpElem {
            p: x.p(),
            ring: x.ring().clone(),
            terms: x
                .terms()
                .map(|(a, c)| (CpKey::new(0, a.clone()), c.clone()))
                .collect(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CpKey, &Coeff)> {
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

    pub fn is_abelian(&self) -> bool {
        self.terms.keys().all(|k| k.k == 0)
    }

    pub fn abelian_part(&self) -> Option<TpElem> {
        if !self.is_abelian() {
            return None;
        }
        TpElem::from_terms(
            &self.ring,
            self.p,
            self.terms.iter().map(|(k, c)| (k.a.clone(), c.clone())),
        )
        .ok()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        self.ring.expect_same(&other.ring)
    }

    fn with_terms(&self, terms: BTreeMap<CpKey, Coeff>) -> Self {
        CpElem {
            p: self.p,
            ring: self.ring.clone(),
            terms,
        }
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
        let mut out = BTreeMap::new();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                if let Some(k) = cp_monomial_product(self.p, x, y) {
                    sparse::accumulate(&mut out, &self.ring, k, self.ring.mul(cx, cy));
                }
            }
        }
        Ok(self.with_terms(out))
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

    /// The triangular representation on `ξ_c`.
    pub fn act_on_basis(&self, c: &PAdicFrac) -> XiVector {
        let mut out = BTreeMap::new();
        for (k, coeff) in &self.terms {
            if let Some(img) = k.act(self.p, c) {
                sparse::accumulate(&mut out, &self.ring, img, coeff.clone());
            }
        }
        out
    }

    pub fn act(&self, v: &XiVector) -> XiVector {
        let mut out = BTreeMap::new();
        for (c, vc) in v {
            for (img, coeff) in self.act_on_basis(c) {
                sparse::accumulate(&mut out, &self.ring, img, self.ring.mul(&coeff, vc));
            }
        }
        out
    }

    /// The matrix on the basis `k/p^level`, restricted to rows inside the
    /// truncation.
    pub fn matrix(&self, level: u32) -> CpMatrix {
        let basis = PAdicFrac::grid(self.p, level);
        let mut rows: BTreeMap<PAdicFrac, Vec<(PAdicFrac, Coeff)>> =
            basis.iter().map(|c| (c.clone(), Vec::new())).collect();
        let mut absent = 0;
        for d in &basis {
            for (c, coeff) in self.act_on_basis(d) {
                match rows.get_mut(&c) {
                    Some(row) => row.push((d.clone(), coeff)),
                    None => absent += 1,
                }
            }
        }
        CpMatrix {
            p: self.p,
            level,
            ring: self.ring.clone(),
            rows: rows.into_iter().collect(),
            absent,
        }
    }

    /// A basis vector `ξ_b` with `b` of level at most `max_level` on which
    /// every monomial lands inside `[0, 1)` at pairwise distinct points, and
    /// the resulting image `x·ξ_b` (nonzero whenever `x` is).
    pub fn separating_vector(&self, max_level: u32) -> Option<(PAdicFrac, XiVector)> {
        let maps: Vec<GElem> = self.terms.keys().map(|k| k.to_affine(self.p)).collect();
        for level in 0..=max_level {
            for b in PAdicFrac::grid(self.p, level) {
                let br = b.to_rational();
                let mut images: Vec<_> = maps.iter().map(|g| g.apply(&br)).collect();
                let one = num_rational::BigRational::from_integer(1.into());
                if images.iter().any(|v| *v >= one) {
                    continue;
                }
                images.sort();
                images.dedup();
                if images.len() == maps.len() {
                    let image = self.act_on_basis(&b);
                    return Some((b, image));
                }
            }
        }
        None
    }

    pub fn to_text(&self) -> String {
        let p = self.p;
        sparse::format_sum(
            &self.ring,
            self.terms.iter().map(|(k, c)| {
                let (n, m) = k.exponents();
                let mut parts = Vec::new();
                if n > 0 {
                    parts.push(format!("mu~({})", num_traits::pow(p as u128, n as usize)));
                }
                if !k.a.is_zero() {
                    parts.push(format!("delta({})", k.a));
                }
                if m > 0 {
                    parts.push(format!("mu*({})", num_traits::pow(p as u128, m as usize)));
                }
                (parts.join("*"), c)
            }),
        )
    }
}

impl fmt::Display for CpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A truncated matrix `T_{c,d}`: rows indexed by `c`, entries by `d`, both on
/// the basis `k/p^level`. Images that leave the truncation are counted in
/// `absent` rather than shown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpMatrix {
    pub p: u64,
    pub level: u32,
    pub ring: Ring,
    pub rows: Vec<(PAdicFrac, Vec<(PAdicFrac, Coeff)>)>,
    pub absent: usize,
}

impl CpMatrix {
    /// No entry above the diagonal: `T_{c,d} ≠ 0` implies `c ≥ d`.
    pub fn is_lower_triangular(&self) -> bool {
        self.rows
            .iter()
            .all(|(c, entries)| entries.iter().all(|(d, _)| c >= d))
    }

    pub fn entry(&self, c: &PAdicFrac, d: &PAdicFrac) -> Option<&Coeff> {
        self.rows
            .iter()
            .find(|(row, _)| row == c)
            .and_then(|(_, entries)| entries.iter().find(|(col, _)| col == d).map(|(_, v)| v))
    }

    /// An aligned text grid; `.` marks a zero entry.
    pub fn to_grid(&self) -> String {
        let labels: Vec<String> = self.rows.iter().map(|(c, _)| c.to_string()).collect();
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|(_, entries)| {
                self.rows
                    .iter()
                    .map(|(d, _)| {
                        entries
                            .iter()
                            .find(|(col, _)| col == d)
                            .map(|(_, v)| self.ring.format(v))
                            .unwrap_or_else(|| ".".to_string())
                    })
                    .collect()
            })
            .collect();
        let width = labels
            .iter()
            .chain(cells.iter().flatten())
            .map(|s| s.len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        out.push_str(&format!("{:>width$} |", ""));
        for l in &labels {
            out.push_str(&format!(" {l:>width$}"));
        }
        out.push('\n');
        for (l, row) in labels.iter().zip(&cells) {
            out.push_str(&format!("{l:>width$} |"));
            for cell in row {
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(k: u32, p: u64, n: u32) -> PAdicFrac {
        PAdicFrac::new(k, p, n).unwrap()
    }

    #[test]
    fn star_tilde_vanishes() {
        for p in [2u64, 3, 5] {
            let fp = Ring::PrimeField(p);
            let x = CpElem::mu_star(&fp, p).unwrap().mul(&CpElem::mu_tilde(&fp, p).unwrap()).unwrap();
            assert!(x.is_zero());
            let y = CpElem::mu_tilde(&fp, p).unwrap().mul(&CpElem::mu_star(&fp, p).unwrap()).unwrap();
            assert_eq!(y, CpElem::delta(&fp, p, PAdicFrac::top(p, 1)).unwrap());
        }
    }

    #[test]
    fn product_examples() {
        let f2 = Ring::PrimeField(2);
        let a = CpElem::monomial(&f2, 2, CpKey::new(-1, f(1, 2, 2))).unwrap();
        let b = CpElem::monomial(&f2, 2, CpKey::new(1, f(1, 2, 1))).unwrap();
        assert!(a.mul(&b).unwrap().is_zero());
        let x = CpElem::monomial(&f2, 2, CpKey::new(1, f(1, 2, 1))).unwrap();
        let y = CpElem::monomial(&f2, 2, CpKey::new(-1, f(1, 2, 2))).unwrap();
        assert_eq!(x.mul(&y).unwrap(), CpElem::delta(&f2, 2, f(7, 2, 3)).unwrap());
    }

    #[test]
    fn action_examples() {
        let f2 = Ring::PrimeField(2);
        let mt = CpElem::mu_tilde(&f2, 2).unwrap();
        assert_eq!(mt.act_on_basis(&PAdicFrac::zero()).into_keys().collect::<Vec<_>>(), vec![f(1, 2, 1)]);
        assert!(CpElem::mu_star(&f2, 2).unwrap().act_on_basis(&f(3, 2, 2)).is_empty());
        let d = CpElem::delta(&f2, 2, f(1, 2, 1)).unwrap();
        assert_eq!(d.act_on_basis(&f(1, 2, 2)).into_keys().collect::<Vec<_>>(), vec![f(3, 2, 2)]);
    }

    #[test]
    fn representation_is_multiplicative_on_samples() {
        let f3 = Ring::PrimeField(3);
        let keys = [
            CpKey::new(2, f(1, 3, 2)),
            CpKey::new(0, f(2, 3, 2)),
            CpKey::new(-1, f(1, 3, 1)),
            CpKey::new(1, PAdicFrac::zero()),
        ];
        for x in &keys {
            for y in &keys {
                let xe = CpElem::monomial(&f3, 3, x.clone()).unwrap();
                let ye = CpElem::monomial(&f3, 3, y.clone()).unwrap();
                let xy = xe.mul(&ye).unwrap();
                for c in PAdicFrac::grid(3, 2) {
                    let v: XiVector = [(c.clone(), f3.one())].into_iter().collect();
                    assert_eq!(xy.act(&v), xe.act(&ye.act(&v)), "{x:?} {y:?} {c}");
                }
            }
        }
    }

    #[test]
    fn matrices() {
        let f2 = Ring::PrimeField(2);
        let m = CpElem::mu_tilde(&f2, 2).unwrap().matrix(2);
        assert!(m.is_lower_triangular());
        assert_eq!(m.rows.len(), 4);
        assert_eq!(m.entry(&f(1, 2, 1), &PAdicFrac::zero()), Some(&f2.one()));
        assert_eq!(m.entry(&f(3, 2, 2), &f(1, 2, 1)), Some(&f2.one()));
        assert_eq!(m.absent, 2);
        assert!(m.to_grid().lines().count() == 5);
    }

    #[test]
    fn separation() {
        let f2 = Ring::PrimeField(2);
        let x = CpElem::mu_tilde(&f2, 2)
            .unwrap()
            .add(&CpElem::delta(&f2, 2, f(1, 2, 1)).unwrap())
            .unwrap();
        let (_, image) = x.separating_vector(6).unwrap();
        assert!(!image.is_empty());
    }
}
