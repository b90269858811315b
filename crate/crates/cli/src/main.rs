use std::io::{self, Read};
use std::process::ExitCode;

use bce_cli::{eval_str, suites, Failure, Value};
use bce_core::json::{matrix_to_json, Element};
use bce_core::Ring;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bce", version, about = "Exact arithmetic in the integral Bost-Connes algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to normal form.
    Eval {
        /// Coefficient ring: z, q, fp:P, fq:P,K[,POLY] or qsqrt.
        #[arg(long, default_value = "z")]
        ring: String,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Run a named check suite.
    Suite {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print the matrix of a characteristic-p element on the level-L basis.
    Matrix {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        level: u32,
        /// Defaults to fp:P.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Convert between expressions and the JSON element form on stdin.
    Json {
        #[command(subcommand)]
        direction: JsonDirection,
    },
}

#[derive(Subcommand)]
enum JsonDirection {
    /// Read an expression, write its normal form as JSON.
    Encode {
        #[arg(long, default_value = "z")]
        ring: String,
    },
    /// Read a JSON element, write its normal form as text.
    Decode,
}

/// Exit status for a failed suite.
const SUITE_FAILED: u8 = 3;

fn parse_ring(tag: &str) -> Result<Ring, (u8, String)> {
    tag.parse::<Ring>().map_err(|e| (2, format!("bad ring {tag:?}: {e}")))
}

fn evaluate(src: &str, ring: &Ring) -> Result<Value, (u8, String)> {
    eval_str(src, ring).map_err(|f: Failure| (f.exit_code() as u8, f.to_string()))
}

fn read_stdin() -> Result<String, (u8, String)> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| (1, format!("error: cannot read stdin: {e}")))?;
    Ok(s)
}

fn run(cli: Cli) -> Result<String, (u8, String)> {
    match cli.command {
        Command::Eval { ring, json, expr } => {
            let v = evaluate(&expr, &parse_ring(&ring)?)?;
            Ok(if json {
                v.to_element().to_json().to_string()
            } else {
                v.to_text()
            })
        }
        Command::Suite { name, seed, json } => {
            let Some(report) = suites::run(&name, seed) else {
                return Err((1, format!("error: unknown suite {name:?}; expected one of {}", suites::SUITES.join(", "))));
            };
            let text = if json {
                report.to_json().to_string()
            } else {
                report.render()
            };
            if report.passed() {
                Ok(text)
            } else {
                Err((SUITE_FAILED, text))
            }
        }
        Command::Matrix { p, level, ring, json, expr } => {
            let ring = parse_ring(&ring.unwrap_or_else(|| format!("fp:{p}")))?;
            if ring.characteristic() != p {
                return Err((1, format!("error: {} does not have characteristic {p}", ring.name())));
            }
            if level > 8 {
                return Err((1, "error: level is limited to 8".into()));
            }
            let v = evaluate(&expr, &ring)?;
            let x = match v {
                Value::Cp(x) => x,
                other => match other.to_element() {
                    Element::Bc(b) => bce_cli::eval::bc_to_cp(&b, p).map_err(|e| (1, format!("error: {e}")))?,
                    _ => return Err((1, "error: matrices are defined for characteristic-p elements".into())),
                },
            };
            let m = x.matrix(level);
            Ok(if json {
                matrix_to_json(&m).to_string()
            } else {
                let tri = if m.is_lower_triangular() { "yes" } else { "no" };
                format!(
                    "{}\nlower-triangular: {tri}; images outside the level-{level} basis: {}",
                    m.to_grid().trim_end(),
                    m.absent
                )
            })
        }
        Command::Json { direction } => match direction {
            JsonDirection::Encode { ring } => {
                let src = read_stdin()?;
                let v = evaluate(src.trim(), &parse_ring(&ring)?)?;
                Ok(v.to_element().to_json().to_string())
            }
            JsonDirection::Decode => {
                let src = read_stdin()?;
                let json: serde_json::Value =
                    serde_json::from_str(&src).map_err(|e| (2, format!("parse error: invalid JSON: {e}")))?;
                let element = Element::from_json(&json).map_err(|e| (2, format!("parse error: {e}")))?;
                Ok(Value::from_element(element).to_text())
            }
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            if code == SUITE_FAILED {
                println!("{msg}");
            } else {
                eprintln!("{msg}");
            }
            ExitCode::from(code)
        }
    }
}
