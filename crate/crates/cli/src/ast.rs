//! Expression trees and their canonical printing.

use std::fmt;

use bce_core::QmodZ;
use num_bigint::{BigInt, BigUint};
use rand::Rng;

/// The argument of `delta(..)`, kept in the form it was written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaArg {
    /// `k/d`
    Plain { k: BigUint, d: BigUint },
    /// `k/b^e`
    Power { k: BigUint, base: BigUint, exp: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigUint),
    /// A literal `p/q`, not reduced.
    Rat(BigUint, BigUint),
    E(QmodZ),
    MuTilde(BigUint),
    MuStar(BigUint),
    Nu(BigUint),
    NuStar(BigUint),
    /// `mu~p`: the generator `μ̃_p` of the `p`-part, `p` taken from the ring.
    MuTildeP,
    MuStarP,
    Delta(DeltaArg),
    Tau(u32),
    Sqrt(BigUint),
    /// The generator `t` of a finite field `F_p[t]/(f)`.
    T,
    Sigma(BigUint, Box<Expr>),
    RhoTilde(BigUint, Box<Expr>),
    Rho(BigUint, Box<Expr>),
    Pi(BigUint),
    Star(Box<Expr>),
    Reduce(BigUint, Box<Expr>),
    Twist(BigInt, BigUint, Box<Expr>),
    Theta(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

const SUM: u8 = 1;
const NEG: u8 = 2;
const PRODUCT: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => SUM,
            Expr::Neg(..) => NEG,
            Expr::Mul(..) => PRODUCT,
            Expr::Pow(..) => POWER,
            _ => ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Rat(p, q) => write!(f, "{p}/{q}"),
            Expr::E(r) => write!(f, "e({r})"),
            Expr::MuTilde(n) => write!(f, "mu~({n})"),
            Expr::MuStar(n) => write!(f, "mu*({n})"),
            Expr::Nu(n) => write!(f, "nu({n})"),
            Expr::NuStar(n) => write!(f, "nu*({n})"),
            Expr::MuTildeP => write!(f, "mu~p"),
            Expr::MuStarP => write!(f, "mu*p"),
            Expr::Delta(DeltaArg::Plain { k, d }) => write!(f, "delta({k}/{d})"),
            Expr::Delta(DeltaArg::Power { k, base, exp }) => write!(f, "delta({k}/{base}^{exp})"),
            Expr::Tau(m) => write!(f, "tau({m})"),
            Expr::Sqrt(s) => write!(f, "sqrt({s})"),
            Expr::T => write!(f, "t"),
            Expr::Sigma(n, x) => write!(f, "sigma_{n}{{{x}}}"),
            Expr::RhoTilde(n, x) => write!(f, "rho~_{n}{{{x}}}"),
            Expr::Rho(n, x) => write!(f, "rho_{n}{{{x}}}"),
            Expr::Pi(n) => write!(f, "pi_{n}"),
            Expr::Star(x) => write!(f, "star{{{x}}}"),
            Expr::Reduce(p, x) => write!(f, "reduce_{p}{{{x}}}"),
            Expr::Twist(a, n, x) => write!(f, "twist({a},{n}){{{x}}}"),
            Expr::Theta(x, y) => write!(f, "theta{{{x}}}({y})"),
            Expr::Neg(x) => {
                write!(f, "-")?;
                x.write_at(f, NEG)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, SUM)?;
                write!(f, "{}", if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write_at(f, NEG)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, PRODUCT)?;
                write!(f, "*")?;
                b.write_at(f, POWER)
            }
            Expr::Pow(a, n) => {
                a.write_at(f, POWER)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// Knobs for [`random_expr`].
#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub max_depth: u32,
    /// Allow every node type, including ones that only parse (ν, δ, τ,
    /// `sqrt`, `t`, ρ, π, star, twist, θ).
    pub all_nodes: bool,
}

fn small<R: Rng + ?Sized>(rng: &mut R, lo: u32, hi: u32) -> BigUint {
    BigUint::from(rng.gen_range(lo..=hi))
}

fn label<R: Rng + ?Sized>(rng: &mut R) -> QmodZ {
    let den = rng.gen_range(1..=12i64);
    QmodZ::of(rng.gen_range(0..den), den)
}

fn leaf<R: Rng + ?Sized>(rng: &mut R, all: bool) -> Expr {
    let choices = if all { 14 } else { 4 };
    match rng.gen_range(0..choices) {
        0 => Expr::Int(small(rng, 0, 5)),
        1 => Expr::E(label(rng)),
        2 => Expr::MuTilde(small(rng, 1, 4)),
        3 => Expr::MuStar(small(rng, 1, 4)),
        4 => Expr::Rat(small(rng, 0, 5), small(rng, 1, 5)),
        5 => Expr::Nu(small(rng, 1, 4)),
        6 => Expr::NuStar(small(rng, 1, 4)),
        7 => Expr::MuTildeP,
        8 => Expr::MuStarP,
        9 => {
            if rng.gen_bool(0.5) {
                Expr::Delta(DeltaArg::Plain { k: small(rng, 0, 3), d: small(rng, 4, 4) })
            } else {
                Expr::Delta(DeltaArg::Power { k: small(rng, 0, 3), base: small(rng, 2, 2), exp: rng.gen_range(2..=3) })
            }
        }
        10 => Expr::Tau(rng.gen_range(0..=3)),
        11 => Expr::Sqrt(small(rng, 1, 7)),
        12 => Expr::T,
        _ => Expr::Pi(small(rng, 1, 6)),
    }
}

/// A random tree. Without `all_nodes` only integral crossed-product
/// constructs appear, so the result evaluates over any coefficient ring.
pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, cfg: GenConfig) -> Expr {
    if cfg.max_depth == 0 || rng.gen_bool(0.3) {
        return leaf(rng, cfg.all_nodes);
    }
    let sub = GenConfig {
        max_depth: cfg.max_depth - 1,
        ..cfg
    };
    let next = |rng: &mut R| Box::new(random_expr(rng, sub));
    let choices = if cfg.all_nodes { 14 } else { 8 };
    match rng.gen_range(0..choices) {
        0 => Expr::Add(next(rng), next(rng)),
        1 => Expr::Sub(next(rng), next(rng)),
        2 | 3 => Expr::Mul(next(rng), next(rng)),
        4 => Expr::Neg(next(rng)),
        5 => Expr::Pow(next(rng), rng.gen_range(0..=2)),
        6 => Expr::Sigma(small(rng, 1, 4), next(rng)),
        7 => Expr::RhoTilde(small(rng, 1, 3), next(rng)),
        8 => Expr::Rho(small(rng, 1, 3), next(rng)),
        9 => Expr::Star(next(rng)),
        10 => Expr::Reduce(small(rng, 2, 3), next(rng)),
        11 => Expr::Twist(BigInt::from(rng.gen_range(-5..=5)), small(rng, 1, 12), next(rng)),
        12 => Expr::Theta(next(rng), next(rng)),
        _ => Expr::Sigma(small(rng, 1, 4), next(rng)),
    }
}
