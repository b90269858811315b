use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The affine map `b ↦ p^n·b + a` in `S ⋊ Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GElem {
    pub p: u64,
    pub n: i64,
    pub a: BigRational,
}

/// A word in the generators `g_a = (0, a)`, `α = (−1, (p−1)/p)`, `β = (1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GWord {
    /// `g_a β^n`, `n ≥ 0`.
    Beta { a: BigRational, n: u32 },
    /// `g_b α^m`, `m ≥ 1`.
    Alpha { b: BigRational, m: u32 },
}

fn p_pow(p: u64, n: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(p));
    if n >= 0 {
        num_traits::pow(base, n as usize)
    } else {
        num_traits::pow(base, n.unsigned_abs() as usize).recip()
    }
}

impl GElem {
    pub fn new(p: u64, n: i64, a: BigRational) -> Self {
        GElem { p, n, a }
    }

    pub fn identity(p: u64) -> Self {
        GElem::new(p, 0, BigRational::zero())
    }

    pub fn g(p: u64, a: BigRational) -> Self {
        GElem::new(p, 0, a)
    }

    pub fn alpha(p: u64) -> Self {
        GElem::new(p, -1, BigRational::new(BigInt::from(p - 1), BigInt::from(p)))
    }

    pub fn beta(p: u64) -> Self {
        GElem::new(p, 1, BigRational::zero())
    }

    pub fn apply(&self, b: &BigRational) -> BigRational {
        p_pow(self.p, self.n) * b + &self.a
    }

    /// `(n, a)∘(m, b) = (n + m, a + p^n·b)`.
    pub fn compose(&self, other: &GElem) -> GElem {
        assert_eq!(self.p, other.p, "primes differ");
        GElem::new(self.p, self.n + other.n, &self.a + p_pow(self.p, self.n) * &other.a)
    }

    pub fn pow(&self, k: u32) -> GElem {
        (0..k).fold(GElem::identity(self.p), |acc, _| acc.compose(self))
    }

    /// Membership in the semigroup of maps with `x ≥ t ⇒ g(x) ≥ t` for all
    /// `t ∈ [0, 1]`. The condition amounts to `g(x) ≥ x` on `[0, 1]` and
    /// `g(x) ≥ 1` for `x > 1`; since `g` is increasing and affine it is
    /// enough to test `x = 0` (giving `a ≥ 0`) and, when `n < 0`, `x = 1`
    /// (giving `a ≥ 1 − p^n`). For `n ≥ 0` the slope is at least one, so
    /// `a ≥ 0` already gives `g(x) ≥ x`.
    pub fn in_plus(&self) -> bool {
        if self.n >= 0 {
            !self.a.is_negative()
        } else {
            self.a >= BigRational::one() - p_pow(self.p, self.n)
        }
    }

    /// The generator word of a member of `G⁺`.
    pub fn decompose(&self) -> Option<GWord> {
        if !self.in_plus() {
            return None;
        }
        Some(if self.n >= 0 {
            GWord::Beta {
                a: self.a.clone(),
                n: self.n as u32,
            }
        } else {
            let m = self.n.unsigned_abs() as u32;
            GWord::Alpha {
                b: &self.a - BigRational::one() + p_pow(self.p, self.n),
                m,
            }
        })
    }
}

impl GWord {
    /// Multiplies the word back out.
    pub fn evaluate(&self, p: u64) -> GElem {
        match self {
            GWord::Beta { a, n } => GElem::g(p, a.clone()).compose(&GElem::beta(p).pow(*n)),
            GWord::Alpha { b, m } => GElem::g(p, b.clone()).compose(&GElem::alpha(p).pow(*m)),
        }
    }
}

impl fmt::Display for GWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (shift, gen, k) = match self {
            GWord::Beta { a, n } => (a, "beta", *n),
            GWord::Alpha { b, m } => (b, "alpha", *m),
        };
        let mut parts = Vec::new();
        if !shift.is_zero() {
            parts.push(format!("g_{{{shift}}}"));
        }
        match k {
            0 => {}
            1 => parts.push(gen.to_string()),
            _ => parts.push(format!("{gen}^{k}")),
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        f.write_str(&parts.join("*"))
    }
}
