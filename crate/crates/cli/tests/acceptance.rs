//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero when any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use bce_cli::ast::{random_expr, GenConfig};
use bce_cli::suites::{self, Report};
use bce_cli::{eval, parse};
use bce_core::Ring;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0;

fn from_reports(reports: &[Report]) -> Result<String, String> {
    let summary: Vec<String> = reports
        .iter()
        .flat_map(|r| r.checks.iter().map(|c| format!("{}: {}/{}", c.name, c.passed, c.total)))
        .collect();
    if reports.iter().all(Report::passed) {
        Ok(format!("{} checks", summary.len()))
    } else {
        let failing: Vec<String> = reports.iter().filter(|r| !r.passed()).map(Report::render).collect();
        Err(failing.join("\n"))
    }
}

fn round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let cfg = GenConfig { max_depth: 4, all_nodes: true };
    for i in 0..500 {
        let e = random_expr(&mut rng, cfg);
        let text = e.to_string();
        match parse(&text) {
            Ok(back) if back == e => {}
            Ok(back) => return Err(format!("instance {i}: {text} reparsed as {back}")),
            Err(err) => return Err(format!("instance {i}: {text}: {err}")),
        }
    }
    Ok("500 trees".into())
}

fn base_change() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let cfg = GenConfig { max_depth: 3, all_nodes: false };
    let primes: Vec<Ring> = [2u64, 3, 5].iter().map(|&p| Ring::prime_field(p).unwrap()).collect();
    let (mut done, mut drawn) = (0, 0);
    while done < 200 {
        drawn += 1;
        if drawn > 5000 {
            return Err(format!("only {done} evaluable expressions in {drawn} draws"));
        }
        let e = random_expr(&mut rng, cfg);
        let Ok(over_z) = eval(&e, &Ring::Integers) else { continue };
        let fp = &primes[done % primes.len()];
        let direct = eval(&e, fp).map_err(|err| format!("{e} over {}: {err}", fp.name()))?;
        let changed = over_z.change_ring(fp).map_err(|err| format!("{e}: {err}"))?;
        if changed != direct {
            return Err(format!("{e} over {}: base change gives {changed}, direct gives {direct}", fp.name()));
        }
        done += 1;
    }
    Ok(format!("200 expressions ({drawn} drawn)"))
}

fn goldens() -> Result<String, String> {
    let cases = [
        ("z", "mu*(2)*mu~(2)", "2"),
        ("q", "pi_2*pi_3 - pi_6", "0"),
        ("fp:2", "rho~_2{e(0)}^2", "0"),
    ];
    for (ring, expr, want) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_bce"))
            .args(["eval", "--ring", ring, expr])
            .output()
            .map_err(|e| format!("cannot run bce: {e}"))?;
        let got = String::from_utf8_lossy(&out.stdout);
        if !out.status.success() || got != format!("{want}\n") {
            return Err(format!("bce eval --ring {ring} {expr:?} printed {got:?}, status {}", out.status));
        }
    }
    Ok("3 goldens".into())
}

fn cli() -> Result<String, String> {
    Ok(format!("{}; {}; {}", round_trip()?, base_change()?, goldens()?))
}

type Criterion = (u32, &'static str, fn() -> Result<String, String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "crossed-product relations over Z", || from_reports(&[suites::presentation(SEED)])),
        (2, "associativity and the module-action oracle", || {
            from_reports(&[suites::associativity(SEED), suites::rep_oracle(SEED)])
        }),
        (3, "idempotents pi_n and sigma/rho over Q", || from_reports(&[suites::idempotents(SEED)])),
        (4, "composition and transfer laws over Z", || from_reports(&[suites::transfer(SEED)])),
        (5, "characteristic-p degeneration for p = 2, 3, 5", || from_reports(&[suites::charp(SEED)])),
        (6, "Frobenius identity over F_2, F_3, F_4, F_9", || from_reports(&[suites::frobenius(SEED)])),
        (7, "reduction mod p and the inverse of sigma_p", || from_reports(&[suites::reduction(SEED)])),
        (8, "nu-presentation, phi, psi and the involution witness", || from_reports(&[suites::hecke(SEED)])),
        (9, "expression language: round trip, base change, goldens", cli),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(info) => println!("[PASS] criterion {n}: {name} ({info}, {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {n}: {name} ({secs:.1}s, seed {SEED})");
                for line in why.lines() {
                    println!("       {line}");
                }
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
