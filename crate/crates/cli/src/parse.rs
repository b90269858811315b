//! Recursive-descent parser for the expression language.
//!
//! ```text
//! sum     := neg (("+" | "-") neg)*
//! neg     := "-" neg | product
//! product := power ("*" power)*
//! power   := primary ("^" INT)*
//! ```

use std::fmt;
use std::str::FromStr;

use bce_core::QmodZ;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::ast::{DeltaArg, Expr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

/// Words that open an atom, in the order they are tried. Longer spellings
/// come before their prefixes.
const ATOM_WORDS: &[&str] = &[
    "e(", "mu~(", "mu*(", "mu~p", "mu*p", "nu*(", "nu(", "delta(", "tau(", "sqrt(", "sigma_",
    "rho~_", "rho_", "pi_", "star{", "reduce_", "twist(", "theta{",
];

fn primary_expected() -> Vec<String> {
    let mut v = vec!["integer".to_string(), "\"(\"".to_string(), "\"t\"".to_string()];
    v.extend(ATOM_WORDS.iter().map(|w| format!("{w:?}")));
    v
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

pub fn parse(src: &str) -> PResult<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error_here(
            format!("unexpected {:?}", p.peek_char().unwrap_or(' ')),
            vec!["\"+\"".into(), "\"-\"".into(), "\"*\"".into(), "\"^\"".into(), "end of input".into()],
        ));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek_char(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_char() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>, expected: Vec<String>) -> ParseError {
        let (line, col) = self.location(pos);
        ParseError {
            line,
            col,
            message: message.into(),
            expected,
        }
    }

    fn error_here(&self, message: impl Into<String>, expected: Vec<String>) -> ParseError {
        self.error_at(self.pos, message, expected)
    }

    fn found(&self) -> String {
        match self.peek_char() {
            Some(c) => format!("unexpected {c:?}"),
            None => "unexpected end of input".into(),
        }
    }

    /// Consumes `tok` after optional whitespace.
    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> PResult<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error_here(self.found(), vec![format!("{tok:?}")]))
        }
    }

    fn digits(&mut self) -> PResult<BigUint> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error_here(self.found(), vec!["integer".into()]));
        }
        let n = BigUint::from_str(&self.rest()[..len]).expect("ascii digits");
        self.pos += len;
        Ok(n)
    }

    fn small(&mut self) -> PResult<u32> {
        let start = self.pos;
        let n = self.digits()?;
        u32::try_from(&n).map_err(|_| self.error_at(start, "exponent too large", vec!["integer below 2^32".into()]))
    }

    fn signed(&mut self) -> PResult<BigInt> {
        let neg = self.eat("-");
        let n = BigInt::from(self.digits()?);
        Ok(if neg { -n } else { n })
    }

    /// A positive integer index such as the `n` in `sigma_n`.
    fn index(&mut self) -> PResult<BigUint> {
        let start = self.pos;
        let n = self.digits()?;
        if n.is_zero() {
            return Err(self.error_at(start, "index must be positive", vec!["positive integer".into()]));
        }
        Ok(n)
    }

    /// `"(" index ")"`.
    fn paren_index(&mut self) -> PResult<BigUint> {
        let n = self.index()?;
        self.expect(")")?;
        Ok(n)
    }

    fn braced(&mut self) -> PResult<Box<Expr>> {
        self.expect("{")?;
        let e = self.sum()?;
        self.expect("}")?;
        Ok(Box::new(e))
    }

    fn sum(&mut self) -> PResult<Expr> {
        let mut acc = self.neg()?;
        loop {
            if self.eat("+") {
                acc = Expr::Add(Box::new(acc), Box::new(self.neg()?));
            } else if self.eat("-") {
                acc = Expr::Sub(Box::new(acc), Box::new(self.neg()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn neg(&mut self) -> PResult<Expr> {
        if self.eat("-") {
            Ok(Expr::Neg(Box::new(self.neg()?)))
        } else {
            self.product()
        }
    }

    fn product(&mut self) -> PResult<Expr> {
        let mut acc = self.power()?;
        while self.eat("*") {
            acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
        }
        Ok(acc)
    }

    fn power(&mut self) -> PResult<Expr> {
        let mut acc = self.primary()?;
        while self.eat("^") {
            acc = Expr::Pow(Box::new(acc), self.small()?);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> PResult<Expr> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        if rest.starts_with(|c: char| c.is_ascii_digit()) {
            let n = self.digits()?;
            if self.eat("/") {
                let den_at = self.pos;
                let d = self.digits()?;
                if d.is_zero() {
                    return Err(self.error_at(den_at, "denominator must be nonzero", vec!["nonzero integer".into()]));
                }
                return Ok(Expr::Rat(n, d));
            }
            return Ok(Expr::Int(n));
        }
        if self.eat("(") {
            let e = self.sum()?;
            self.expect(")")?;
            return Ok(e);
        }
        let Some(word) = ATOM_WORDS.iter().find(|w| rest.starts_with(**w)) else {
            if rest.starts_with('t') && !rest[1..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
                self.pos += 1;
                return Ok(Expr::T);
            }
            let ident: String = rest
                .chars()
                .take_while(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '~'))
                .collect();
            let message = if ident.is_empty() {
                self.found()
            } else {
                format!("unknown name {ident:?}")
            };
            return Err(self.error_at(start, message, primary_expected()));
        };
        self.pos += word.len();
        Ok(match *word {
            "e(" => Expr::E(self.label(")")?),
            "mu~(" => Expr::MuTilde(self.paren_index()?),
            "mu*(" => Expr::MuStar(self.paren_index()?),
            "mu~p" => Expr::MuTildeP,
            "mu*p" => Expr::MuStarP,
            "nu(" => Expr::Nu(self.paren_index()?),
            "nu*(" => Expr::NuStar(self.paren_index()?),
            "delta(" => self.delta()?,
            "tau(" => {
                let m = self.small()?;
                self.expect(")")?;
                Expr::Tau(m)
            }
            "sqrt(" => {
                let s = self.digits()?;
                self.expect(")")?;
                Expr::Sqrt(s)
            }
            "sigma_" => {
                let n = self.index()?;
                Expr::Sigma(n, self.braced()?)
            }
            "rho~_" => {
                let n = self.index()?;
                Expr::RhoTilde(n, self.braced()?)
            }
            "rho_" => {
                let n = self.index()?;
                Expr::Rho(n, self.braced()?)
            }
            "pi_" => Expr::Pi(self.index()?),
            "star{" => {
                self.pos -= 1;
                Expr::Star(self.braced()?)
            }
            "reduce_" => {
                let p = self.index()?;
                Expr::Reduce(p, self.braced()?)
            }
            "twist(" => {
                let a = self.signed()?;
                self.expect(",")?;
                let n = self.index()?;
                self.expect(")")?;
                Expr::Twist(a, n, self.braced()?)
            }
            "theta{" => {
                self.pos -= 1;
                let x = self.braced()?;
                self.expect("(")?;
                let y = self.sum()?;
                self.expect(")")?;
                Expr::Theta(x, Box::new(y))
            }
            _ => unreachable!("every atom word is handled"),
        })
    }

    /// `["-"] INT ["/" INT]` followed by `close`.
    fn label(&mut self, close: &str) -> PResult<QmodZ> {
        let num = self.signed()?;
        let mut den = BigInt::from(1);
        if self.eat("/") {
            let at = self.pos;
            den = BigInt::from(self.digits()?);
            if den.is_zero() {
                return Err(self.error_at(at, "denominator must be nonzero", vec!["nonzero integer".into()]));
            }
        }
        self.expect(close)?;
        Ok(QmodZ::new(num, den).expect("nonzero denominator"))
    }

    fn delta(&mut self) -> PResult<Expr> {
        let k = self.digits()?;
        self.expect("/")?;
        let at = self.pos;
        let d = self.digits()?;
        if d.is_zero() {
            return Err(self.error_at(at, "denominator must be nonzero", vec!["nonzero integer".into()]));
        }
        let arg = if self.eat("^") {
            DeltaArg::Power {
                k,
                base: d,
                exp: self.small()?,
            }
        } else {
            DeltaArg::Plain { k, d }
        };
        self.expect(")")?;
        Ok(Expr::Delta(arg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(s: &str) -> String {
        parse(s).unwrap().to_string()
    }

    #[test]
    fn precedence() {
        assert_eq!(round_trip("1+2*3"), "1 + 2*3");
        assert_eq!(round_trip("-2*3"), "-2*3");
        assert!(matches!(parse("-2*3").unwrap(), Expr::Neg(_)));
        assert!(matches!(parse("2*3^2").unwrap(), Expr::Mul(..)));
        assert_eq!(round_trip("(1 - 2) - (3 - 4)"), "1 - 2 - (3 - 4)");
        assert_eq!(round_trip("mu*(2)*mu~(2)"), "mu*(2)*mu~(2)");
        assert_eq!(round_trip("pi_2*pi_3 - pi_6"), "pi_2*pi_3 - pi_6");
        assert_eq!(round_trip("rho~_2{e(0)}^2"), "rho~_2{e(0/1)}^2");
    }

    #[test]
    fn atoms() {
        assert_eq!(parse("e(-1/3)").unwrap(), Expr::E(QmodZ::of(2, 3)));
        assert_eq!(round_trip("delta(1/2^3)"), "delta(1/2^3)");
        assert_eq!(round_trip("delta(3/8)"), "delta(3/8)");
        assert_eq!(round_trip("twist(-1, 6){e(1/6)}"), "twist(-1,6){e(1/6)}");
        assert_eq!(round_trip("theta{mu~(2)}(e(1/3))"), "theta{mu~(2)}(e(1/3))");
        assert_eq!(round_trip("t^2 + sqrt(2)*tau(1)"), "t^2 + sqrt(2)*tau(1)");
        assert_eq!(round_trip("mu~p*mu*p"), "mu~p*mu*p");
        assert_eq!(round_trip("star{nu(2)*nu*(3)}"), "star{nu(2)*nu*(3)}");
    }

    #[test]
    fn diagnostics() {
        let e = parse("e(1/0)").unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
        assert!(e.message.contains("denominator must be nonzero"));
        let e = parse("1 +\n  foo(2)").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        assert!(e.expected.iter().any(|x| x.contains("mu~(")));
        let e = parse("sigma_2{e(1/2)").unwrap_err();
        assert_eq!(e.expected, vec!["\"}\"".to_string()]);
        assert!(parse("mu~(0)").is_err());
        assert!(parse("1 2").is_err());
        assert!(parse("").is_err());
    }
}
