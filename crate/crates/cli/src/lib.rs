//! Expression language, evaluator and check suites behind the `bce` binary.

pub mod ast;
pub mod eval;
pub mod parse;
pub mod suites;

use std::fmt;

pub use ast::Expr;
pub use eval::{eval, eval_str, EvalError, Value};
pub use parse::{parse, ParseError};

/// Why a command did not produce a result. Each kind has its own exit code.
#[derive(Debug)]
pub enum Failure {
    Parse(ParseError),
    Eval(EvalError),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Eval(_) => 1,
            Failure::Parse(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(e) => write!(f, "{e}"),
            Failure::Eval(e) => write!(f, "error: {e}"),
        }
    }
}
