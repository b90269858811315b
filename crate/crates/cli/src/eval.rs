//! Evaluation of expression trees to normal forms.

use std::fmt;

use bce_core::arith::numtheory::prime_power_exponent;
use bce_core::char_p::{iota, reduce_mod_p, XiVector};
use bce_core::json::Element;
use bce_core::{BcElem, CpElem, GroupRingElem, HeckeElem, PAdicFrac, QmodZ, Ring, TpElem};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::ast::{DeltaArg, Expr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError(pub String);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for EvalError {}

impl From<bce_core::Error> for EvalError {
    fn from(e: bce_core::Error) -> Self {
        EvalError(e.to_string())
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError(msg.into()))
}

pub type EResult<T> = Result<T, EvalError>;

/// An evaluated expression. Elements written with `μ` live in `Bc`, with `ν`
/// in `Hecke`, and with `δ`, `τ`, `mu~p`, `mu*p` in `Cp`. Abelian values
/// move between the three as needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Bc(BcElem),
    Hecke(HeckeElem),
    Cp(CpElem),
}

impl Value {
    pub fn ring(&self) -> &Ring {
        match self {
            Value::Bc(x) => x.ring(),
            Value::Hecke(x) => x.ring(),
            Value::Cp(x) => x.ring(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Bc(x) => x.is_zero(),
            Value::Hecke(x) => x.is_zero(),
            Value::Cp(x) => x.is_zero(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Value::Bc(x) => x.to_text(),
            Value::Hecke(x) => x.to_text(),
            Value::Cp(x) => x.to_text(),
        }
    }

    pub fn to_element(&self) -> Element {
        match self {
            Value::Bc(x) => Element::Bc(x.clone()),
            Value::Hecke(x) => Element::Hecke(x.clone()),
            Value::Cp(x) => Element::Cp(x.clone()),
        }
    }

    pub fn from_element(e: Element) -> Value {
        match e {
            Element::GroupRing(x) => Value::Bc(BcElem::embed_gr(&x)),
            Element::Bc(x) => Value::Bc(x),
            Element::Hecke(x) => Value::Hecke(x),
            Element::Tp(x) => Value::Cp(CpElem::from_tp(&x)),
            Element::Cp(x) => Value::Cp(x),
        }
    }

    pub fn change_ring(&self, ring: &Ring) -> EResult<Value> {
        Ok(match self {
            Value::Bc(x) => Value::Bc(x.change_ring(ring)?),
            Value::Hecke(x) => Value::Hecke(x.change_ring(ring)?),
            Value::Cp(_) => return fail("characteristic-p elements cannot change coefficient ring"),
        })
    }

    /// The abelian part as a group-ring element. `Cp` values go through `ι⁻¹`.
    fn group_ring(&self, op: &str) -> EResult<GroupRingElem> {
        let gr = match self {
            Value::Bc(x) => x.abelian_part(),
            Value::Hecke(x) => x.phi().abelian_part(),
            Value::Cp(x) => x.abelian_part().map(|t| t.iota_inv()),
        };
        gr.ok_or_else(|| EvalError(format!("{op} applies only to abelian elements")))
    }

    fn as_cp(&self, p: u64) -> EResult<CpElem> {
        match self {
            Value::Cp(x) => Ok(x.clone()),
            Value::Bc(x) => bc_to_cp(x, p),
            Value::Hecke(x) => {
                if x.phi().is_abelian() {
                    bc_to_cp(&x.phi(), p)
                } else {
                    fail("cannot combine nu generators with characteristic-p generators")
                }
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Rewrites `c·μ̃_{p^k} e(r) μ*_{p^j}` as `c·μ̃^k ι(e(r)) μ*^j`.
pub fn bc_to_cp(x: &BcElem, p: u64) -> EResult<CpElem> {
    let ring = x.ring();
    let mut out = CpElem::zero(ring, p)?;
    for (key, c) in x.terms() {
        let k = prime_power_exponent(key.deg.numer(), p);
        let j = prime_power_exponent(key.deg.denom(), p);
        let (Some(k), Some(j)) = (k, j) else {
            return fail(format!(
                "degree {} is not a power of {p}, so it has no characteristic-{p} counterpart",
                key.deg
            ));
        };
        let middle = CpElem::from_tp(&iota(&GroupRingElem::monomial(ring, key.r.clone(), c.clone()), p)?);
        let term = CpElem::mu_tilde(ring, p)?
            .pow(k as u64)
            .mul(&middle)?
            .mul(&CpElem::mu_star(ring, p)?.pow(j as u64))?;
        out = out.add(&term)?;
    }
    Ok(out)
}

fn char_p(ring: &Ring, what: &str) -> EResult<u64> {
    match ring.characteristic() {
        0 => fail(format!("{what} needs a coefficient ring of prime characteristic, not {}", ring.name())),
        p => Ok(p),
    }
}

fn to_u64(n: &BigUint) -> EResult<u64> {
    n.to_u64().ok_or_else(|| EvalError(format!("index {n} is too large")))
}

/// The exponent `j` when `n = p^j` and the value is characteristic-p.
fn cp_exponent(v: &Value, n: &BigUint) -> Option<(CpElem, u32)> {
    match v {
        Value::Cp(x) if x.is_abelian() => prime_power_exponent(n, x.p()).map(|j| (x.clone(), j)),
        _ => None,
    }
}

/// Brings both operands to a common kind.
fn unify(a: Value, b: Value) -> EResult<(Value, Value)> {
    use Value::*;
    Ok(match (a, b) {
        (Bc(x), Hecke(y)) => {
            if x.is_abelian() {
                (Hecke(HeckeElem::phi_inv(&x)), Hecke(y))
            } else if y.phi().is_abelian() {
                (Bc(x), Bc(y.phi()))
            } else {
                return fail("cannot combine mu generators with nu generators");
            }
        }
        (Hecke(x), Bc(y)) => {
            let (b, a) = unify(Bc(y), Hecke(x))?;
            (a, b)
        }
        (Cp(x), other) if !matches!(other, Cp(_)) => {
            let y = other.as_cp(x.p())?;
            (Cp(x), Cp(y))
        }
        (other, Cp(y)) if !matches!(other, Cp(_)) => (Cp(other.as_cp(y.p())?), Cp(y)),
        pair => pair,
    })
}

fn binary(a: Value, b: Value, op: char) -> EResult<Value> {
    use Value::*;
    let (a, b) = unify(a, b)?;
    Ok(match (a, b, op) {
        (Bc(x), Bc(y), '+') => Bc(x.add(&y)?),
        (Bc(x), Bc(y), '-') => Bc(x.sub(&y)?),
        (Bc(x), Bc(y), _) => Bc(x.mul(&y)?),
        (Hecke(x), Hecke(y), '+') => Hecke(x.add(&y)?),
        (Hecke(x), Hecke(y), '-') => Hecke(x.sub(&y)?),
        (Hecke(x), Hecke(y), _) => Hecke(x.mul(&y)?),
        (Cp(x), Cp(y), '+') => Cp(x.add(&y)?),
        (Cp(x), Cp(y), '-') => Cp(x.sub(&y)?),
        (Cp(x), Cp(y), _) => Cp(x.mul(&y)?),
        _ => unreachable!("unify returns matching kinds"),
    })
}

fn padic_arg(arg: &DeltaArg, p: u64) -> EResult<PAdicFrac> {
    let (k, d) = match arg {
        DeltaArg::Plain { k, d } => (k.clone(), d.clone()),
        DeltaArg::Power { k, base, exp } => (k.clone(), num_traits::pow(base.clone(), *exp as usize)),
    };
    if k >= d {
        return fail(format!("delta({k}/{d}) needs an argument in [0, 1)"));
    }
    Ok(PAdicFrac::from_qmodz(&QmodZ::new(k, d)?, p)?)
}

/// Evaluates `expr` with coefficients in `ring`.
pub fn eval(expr: &Expr, ring: &Ring) -> EResult<Value> {
    use Value::*;
    Ok(match expr {
        Expr::Int(n) => Bc(BcElem::constant(ring, ring.from_biguint(n))),
        Expr::Rat(p, q) => {
            let r = BigRational::new(p.clone().into(), q.clone().into());
            Bc(BcElem::constant(ring, ring.from_rational(&r)?))
        }
        Expr::E(r) => Bc(BcElem::e(ring, r.clone())),
        Expr::MuTilde(n) => Bc(BcElem::mu_tilde(ring, n.clone())?),
        Expr::MuStar(n) => Bc(BcElem::mu_star(ring, n.clone())?),
        Expr::Nu(n) => Hecke(HeckeElem::nu(ring, n.clone())?),
        Expr::NuStar(n) => Hecke(HeckeElem::nu_star(ring, n.clone())?),
        Expr::MuTildeP => Cp(CpElem::mu_tilde(ring, char_p(ring, "mu~p")?)?),
        Expr::MuStarP => Cp(CpElem::mu_star(ring, char_p(ring, "mu*p")?)?),
        Expr::Delta(arg) => {
            let p = char_p(ring, "delta")?;
            Cp(CpElem::delta(ring, p, padic_arg(arg, p)?)?)
        }
        Expr::Tau(m) => {
            let p = char_p(ring, "tau")?;
            Cp(CpElem::from_tp(&TpElem::tau(ring, p, *m)?))
        }
        Expr::Sqrt(s) => Bc(BcElem::constant(ring, ring.sqrt(s)?)),
        Expr::T => Bc(BcElem::constant(ring, ring.generator()?)),
        Expr::Pi(n) => Bc(BcElem::embed_gr(&GroupRingElem::pi(ring, to_u64(n)?)?)),
        Expr::Neg(x) => match eval(x, ring)? {
            Bc(x) => Bc(x.neg()),
            Hecke(x) => Hecke(x.neg()),
            Cp(x) => Cp(x.neg()),
        },
        Expr::Add(a, b) => binary(eval(a, ring)?, eval(b, ring)?, '+')?,
        Expr::Sub(a, b) => binary(eval(a, ring)?, eval(b, ring)?, '-')?,
        Expr::Mul(a, b) => binary(eval(a, ring)?, eval(b, ring)?, '*')?,
        Expr::Pow(x, n) => match eval(x, ring)? {
            Bc(x) => Bc(x.pow(*n as u64)),
            Hecke(x) => Hecke(x.pow(*n as u64)),
            Cp(x) => Cp(x.pow(*n as u64)),
        },
        Expr::Sigma(n, x) => {
            let v = eval(x, ring)?;
            if let Some((c, j)) = cp_exponent(&v, n) {
                let t = c.abelian_part().expect("abelian");
                return Ok(Cp(CpElem::from_tp(&t.sigma_pow(j))));
            }
            let gr = v.group_ring(&format!("sigma_{n}"))?.sigma(n.clone());
            rewrap(&v, gr)
        }
        Expr::RhoTilde(n, x) => {
            let v = eval(x, ring)?;
            if let Some((c, j)) = cp_exponent(&v, n) {
                let t = c.abelian_part().expect("abelian");
                return Ok(Cp(CpElem::from_tp(&t.rho_pow(j))));
            }
            let gr = v.group_ring(&format!("rho~_{n}"))?.rho_tilde(to_u64(n)?);
            rewrap(&v, gr)
        }
        Expr::Rho(n, x) => {
            let v = eval(x, ring)?;
            let gr = v.group_ring(&format!("rho_{n}"))?.rho(to_u64(n)?)?;
            rewrap(&v, gr)
        }
        Expr::Star(x) => match eval(x, ring)? {
            Bc(x) => Bc(x.star()?),
            Hecke(x) => Hecke(x.star()?),
            Cp(_) => return fail("star is not defined on characteristic-p elements"),
        },
        Expr::Reduce(p, x) => {
            let v = eval(x, ring)?;
            let gr = reduce_mod_p(&v.group_ring(&format!("reduce_{p}"))?, to_u64(p)?);
            rewrap(&v, gr)
        }
        Expr::Twist(a, n, x) => {
            let v = eval(x, ring)?;
            let gr = v.group_ring("twist")?.galois_twist(a, n)?;
            rewrap(&v, gr)
        }
        Expr::Theta(x, y) => {
            let (op, arg) = (eval(x, ring)?, eval(y, ring)?);
            let cp_prime = match (&op, &arg) {
                (Cp(c), _) | (_, Cp(c)) => Some(c.p()),
                _ => None,
            };
            if let Some(p) = cp_prime {
                let op = op.as_cp(p)?;
                let t = arg
                    .as_cp(p)?
                    .abelian_part()
                    .ok_or_else(|| EvalError("theta acts on abelian elements".into()))?;
                let v: XiVector = t.terms().map(|(a, c)| (a.clone(), c.clone())).collect();
                Cp(CpElem::from_tp(&TpElem::from_terms(ring, p, op.act(&v))?))
            } else {
                let xi = arg.group_ring("theta")?;
                let op = match op {
                    Hecke(h) => h.phi(),
                    Bc(b) => b,
                    Cp(_) => unreachable!("characteristic-p operands handled above"),
                };
                Bc(BcElem::embed_gr(&op.theta(&xi)?))
            }
        }
    })
}

/// Returns a group-ring result in the same presentation as the input.
fn rewrap(input: &Value, gr: GroupRingElem) -> Value {
    match input {
        Value::Hecke(_) => Value::Hecke(HeckeElem::embed_gr(&gr)),
        _ => Value::Bc(BcElem::embed_gr(&gr)),
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str, ring: &Ring) -> Result<Value, crate::Failure> {
    let expr = crate::parse::parse(src).map_err(crate::Failure::Parse)?;
    eval(&expr, ring).map_err(crate::Failure::Eval)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str, ring: &str) -> String {
        eval_str(s, &ring.parse().unwrap()).unwrap().to_text()
    }

    fn err(s: &str, ring: &str) -> String {
        match eval_str(s, &ring.parse().unwrap()) {
            Err(crate::Failure::Eval(e)) => e.0,
            other => panic!("expected an evaluation error, got {other:?}"),
        }
    }

    #[test]
    fn goldens() {
        assert_eq!(ev("mu*(2)*mu~(2)", "z"), "2");
        assert_eq!(ev("pi_2*pi_3 - pi_6", "q"), "0");
        assert_eq!(ev("rho~_2{e(0)}^2", "fp:2"), "0");
    }

    #[test]
    fn presentation_in_expressions() {
        assert_eq!(ev("mu~(2)*mu*(2)", "z"), ev("rho~_2{e(0)}", "z"));
        assert_eq!(ev("mu*(3)*e(1/3)", "z"), ev("sigma_3{e(1/3)}*mu*(3)", "z"));
        assert_eq!(ev("nu*(2)*nu(2)", "z"), "2");
        assert_eq!(ev("nu(2)*e(1/2)", "z"), ev("nu(2)*e(1/2)", "z"));
        assert_eq!(ev("star{mu~(2)}", "q"), "2*mu*(2)");
    }

    #[test]
    fn errors() {
        assert!(err("rho_2{e(1/3)}", "fp:2").contains("2 is not invertible"));
        assert!(err("mu~(2)*nu(2)", "z").contains("cannot combine"));
        assert!(err("sigma_2{mu~(2)}", "z").contains("abelian"));
        assert!(err("delta(1/3)", "fp:2").contains("2-power"));
        assert!(err("mu~p", "z").contains("prime characteristic"));
    }

    #[test]
    fn char_p_values() {
        assert_eq!(ev("mu*p*mu~p", "fp:2"), "0");
        assert_eq!(ev("e(1/2)", "fp:2"), "e(1/2)");
        assert_eq!(ev("1 - e(1/2) - delta(1/2)", "fp:2"), "0");
        assert_eq!(ev("rho~_2{tau(1)}", "fp:2"), ev("tau(2)", "fp:2"));
        assert_eq!(ev("theta{mu~p}(1)", "fp:3"), ev("delta(2/3)", "fp:3"));
        assert_eq!(ev("t^2 + t + 1", "fq:2,2"), "0");
    }
}
