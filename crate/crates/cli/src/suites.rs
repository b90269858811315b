//! Randomized and exhaustive identity checks, grouped into suites.
//!
//! Every check draws from a generator seeded by the caller, so a failing
//! instance can be reproduced from the seed printed next to it.

use std::fmt::Write as _;

use bce_core::char_p::{iota, reduce_mod_p, reduced_rho, tau_relations_hold};
use bce_core::hecke::{default_mismatch_witness, sigma_i_half};
use bce_core::{sample, BcElem, CpElem, GroupRingElem, HeckeElem, PAdicFrac, QmodZ, Ring, TpElem};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Failures kept per check; the counts are always complete.
const KEEP: usize = 5;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: 0,
            total: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < KEEP {
            self.failures.push(detail());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total && self.total > 0
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: &str, seed: u64) -> Self {
        Report {
            suite: suite.into(),
            seed,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    fn merge(mut self, other: Report) -> Report {
        self.checks.extend(other.checks);
        self
    }

    pub fn render(&self) -> String {
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        for c in &self.checks {
            let tag = if c.ok() { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{tag}] {}: {}/{}", c.name, c.passed, c.total);
            for f in &c.failures {
                let _ = writeln!(out, "         seed {}: {f}", self.seed);
            }
        }
        let verdict = if self.passed() { "passed" } else { "FAILED" };
        let _ = write!(out, "{verdict}");
        out
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "total": c.total, "failures": c.failures}))
            .collect();
        json!({"suite": self.suite, "seed": self.seed, "passed": self.passed(), "checks": checks})
    }
}

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn z() -> Ring {
    Ring::Integers
}

fn q() -> Ring {
    Ring::Rationals
}

fn mu_t(ring: &Ring, n: u64) -> BcElem {
    BcElem::mu_tilde(ring, n).expect("positive")
}

fn mu_s(ring: &Ring, n: u64) -> BcElem {
    BcElem::mu_star(ring, n).expect("positive")
}

fn mul(a: &BcElem, b: &BcElem) -> BcElem {
    a.mul(b).expect("same ring")
}

fn emb(x: &GroupRingElem) -> BcElem {
    BcElem::embed_gr(x)
}

fn gmul(a: &GroupRingElem, b: &GroupRingElem) -> GroupRingElem {
    a.mul(b).expect("same ring")
}

/// The defining relations of the crossed product over `Z`.
pub fn presentation(seed: u64) -> Report {
    let ring = z();
    let mut r = rng(seed, 1);
    let xs: Vec<GroupRingElem> = (0..100).map(|_| sample::group_ring(&mut r, &ring, 4, 24)).collect();
    let mut conj = Check::new("mu~_n x mu*_n = rho~_n(x)");
    let mut left = Check::new("mu*_n x = sigma_n(x) mu*_n");
    let mut right = Check::new("x mu~_n = mu~_n sigma_n(x)");
    let mut mult_t = Check::new("mu~_nm = mu~_n mu~_m");
    let mut mult_s = Check::new("mu*_nm = mu*_n mu*_m");
    let mut norm = Check::new("mu*_n mu~_n = n");
    let mut coprime = Check::new("mu~_n mu*_m = mu*_m mu~_n for coprime n, m");
    for n in 2..=12u64 {
        let (t, s) = (mu_t(&ring, n), mu_s(&ring, n));
        for (i, x) in xs.iter().enumerate() {
            let xe = emb(x);
            let sx = emb(&x.sigma(n));
            conj.record(mul(&mul(&t, &xe), &s) == emb(&x.rho_tilde(n)), || format!("n = {n}, instance {i}: x = {x}"));
            left.record(mul(&s, &xe) == mul(&sx, &s), || format!("n = {n}, instance {i}: x = {x}"));
            right.record(mul(&xe, &t) == mul(&t, &sx), || format!("n = {n}, instance {i}: x = {x}"));
        }
        norm.record(mul(&s, &t) == BcElem::constant(&ring, ring.from_i64(n as i64)), || format!("n = {n}"));
        for m in 2..=12u64 {
            mult_t.record(mu_t(&ring, n * m) == mul(&t, &mu_t(&ring, m)), || format!("n = {n}, m = {m}"));
            mult_s.record(mu_s(&ring, n * m) == mul(&s, &mu_s(&ring, m)), || format!("n = {n}, m = {m}"));
            if n.gcd(&m) == 1 {
                coprime.record(mul(&t, &mu_s(&ring, m)) == mul(&mu_s(&ring, m), &t), || format!("n = {n}, m = {m}"));
            }
        }
    }
    Report {
        suite: "presentation".into(),
        seed,
        checks: vec![conj, left, right, mult_t, mult_s, norm, coprime],
    }
}

/// Associativity of the normal-form product on random monomial triples.
pub fn associativity(seed: u64) -> Report {
    let ring = z();
    let mut r = rng(seed, 2);
    let mut check = Check::new("(xy)z = x(yz) on monomials");
    let mut sums = Check::new("(xy)z = x(yz) on sums");
    for i in 0..500 {
        let x = sample::bc_monomial(&mut r, &ring, 12, 24);
        let y = sample::bc_monomial(&mut r, &ring, 12, 24);
        let w = sample::bc_monomial(&mut r, &ring, 12, 24);
        check.record(mul(&mul(&x, &y), &w) == mul(&x, &mul(&y, &w)), || {
            format!("instance {i}: x = {x}, y = {y}, z = {w}")
        });
    }
    for i in 0..100 {
        let x = sample::bc(&mut r, &ring, 3, 12, 24);
        let y = sample::bc(&mut r, &ring, 3, 12, 24);
        let w = sample::bc(&mut r, &ring, 3, 12, 24);
        sums.record(mul(&mul(&x, &y), &w) == mul(&x, &mul(&y, &w)), || {
            format!("instance {i}: x = {x}, y = {y}, z = {w}")
        });
    }
    let mut report = Report::new("associativity", seed);
    report.checks = vec![check, sums];
    report
}

/// The product against the module action on `E`: `(xy)·ξ = x·(y·ξ)`.
pub fn rep_oracle(seed: u64) -> Report {
    let ring = z();
    let mut r = rng(seed, 3);
    let mut check = Check::new("(xy).xi(1,1) = x.(y.xi(1,1))");
    for i in 0..500 {
        let x = sample::bc(&mut r, &ring, 2, 12, 24);
        let y = sample::bc(&mut r, &ring, 2, 12, 24);
        let oracle = x.act(&y.normal_coords()).expect("same ring");
        check.record(mul(&x, &y).normal_coords() == oracle, || format!("instance {i}: x = {x}, y = {y}"));
    }
    let mut report = Report::new("rep-oracle", seed);
    report.checks = vec![check];
    report
}

/// The idempotents `π_n` and the maps `σ_n`, `ρ_n` over `Q`.
pub fn idempotents(seed: u64) -> Report {
    let ring = q();
    let mut r = rng(seed, 4);
    let pi = |n: u64| GroupRingElem::pi(&ring, n).expect("rational ring");
    let mut square = Check::new("pi_n^2 = pi_n");
    let mut lcm = Check::new("pi_n pi_m = pi_lcm(n,m)");
    let mut section = Check::new("sigma_n rho_n = id");
    let mut proj = Check::new("rho_n sigma_n = pi_n");
    for n in 1..=12u64 {
        square.record(gmul(&pi(n), &pi(n)) == pi(n), || format!("n = {n}"));
        for m in 1..=12u64 {
            lcm.record(gmul(&pi(n), &pi(m)) == pi(n.lcm(&m)), || format!("n = {n}, m = {m}"));
        }
        for i in 0..20 {
            let x = sample::group_ring(&mut r, &ring, 4, 24);
            let rho = x.rho(n).expect("rational ring");
            section.record(rho.sigma(n) == x, || format!("n = {n}, instance {i}: x = {x}"));
            let back = x.sigma(n).rho(n).expect("rational ring");
            proj.record(back == gmul(&pi(n), &x), || format!("n = {n}, instance {i}: x = {x}"));
        }
    }
    let mut report = Report::new("idempotents", seed);
    report.checks = vec![square, lcm, section, proj];
    report
}

/// Composition laws of `σ`, `ρ̃` and the transfer formula over `Z`.
pub fn transfer(seed: u64) -> Report {
    let ring = z();
    let mut r = rng(seed, 5);
    let mut sigma = Check::new("sigma_nm = sigma_n sigma_m");
    let mut rho = Check::new("rho~_mn = rho~_m rho~_n");
    let mut proj = Check::new("rho~_m(sigma_m(x) y) = x rho~_m(y)");
    let mut mixed = Check::new("sigma_c rho~_b = gcd(b,c) rho~_b' sigma_c'");
    for i in 0..200 {
        let n = r.gen_range(1..=12u64);
        let m = r.gen_range(1..=12u64);
        let x = sample::group_ring(&mut r, &ring, 4, 24);
        let y = sample::group_ring(&mut r, &ring, 4, 24);
        sigma.record(x.sigma(n * m) == x.sigma(m).sigma(n), || format!("instance {i}: n = {n}, m = {m}, x = {x}"));
        rho.record(x.rho_tilde(m * n) == x.rho_tilde(n).rho_tilde(m), || format!("instance {i}: n = {n}, m = {m}, x = {x}"));
        proj.record(
            gmul(&x.sigma(m), &y).rho_tilde(m) == gmul(&x, &y.rho_tilde(m)),
            || format!("instance {i}: m = {m}, x = {x}, y = {y}"),
        );
        let (b, c) = (n, m);
        let g = b.gcd(&c);
        let lhs = x.rho_tilde(b).sigma(c);
        let rhs = x.sigma(c / g).rho_tilde(b / g).scale(&ring.from_i64(g as i64));
        mixed.record(lhs == rhs, || format!("instance {i}: b = {b}, c = {c}, x = {x}"));
    }
    let mut report = Report::new("transfer", seed);
    report.checks = vec![sigma, rho, proj, mixed];
    report
}

pub const CHARP_PRIMES: [u64; 3] = [2, 3, 5];

/// The expected row of a structure matrix: `(c, d)` is one exactly on the
/// pattern, restricted to the grid.
fn pattern_matches(x: &CpElem, level: u32, rule: impl Fn(&PAdicFrac) -> Option<PAdicFrac>) -> bool {
    let m = x.matrix(level);
    if !m.is_lower_triangular() {
        return false;
    }
    let grid = PAdicFrac::grid(x.p(), level);
    let one = m.ring.one();
    let mut expected: Vec<(PAdicFrac, PAdicFrac)> = grid
        .iter()
        .filter_map(|d| rule(d).filter(|c| c.level(x.p()) <= level).map(|c| (c, d.clone())))
        .collect();
    expected.sort();
    let mut got = Vec::new();
    for (c, row) in &m.rows {
        for (d, coeff) in row {
            if *coeff != one {
                return false;
            }
            got.push((c.clone(), d.clone()));
        }
    }
    got.sort();
    got == expected
}

/// The characteristic-p degeneration for `p = 2, 3, 5`.
pub fn charp(seed: u64) -> Report {
    let mut checks = Vec::new();
    for p in CHARP_PRIMES {
        let ring = Ring::prime_field(p).expect("prime");
        let mut r = rng(seed, 100 + p);
        let tag = |s: &str| format!("p = {p}: {s}");

        let mut nil = Check::new(tag("pi~_p^2 = 0"));
        let pt = GroupRingElem::one(&ring).rho_tilde(p);
        nil.record(gmul(&pt, &pt).is_zero() && !pt.is_zero(), || format!("pi~_p = {pt}"));
        checks.push(nil);

        let mut bij = Check::new(tag("iota is bijective at level <= 4"));
        for a in PAdicFrac::grid(p, 4) {
            let e = GroupRingElem::e(&ring, a.to_qmodz());
            let there = iota(&e, p).expect("p-power label");
            bij.record(there.iota_inv() == e, || format!("e({a})"));
            let d = TpElem::delta(&ring, p, a.clone()).expect("char p");
            bij.record(iota(&d.iota_inv(), p).expect("p-power labels") == d, || format!("delta({a})"));
        }
        checks.push(bij);

        let mut hom = Check::new(tag("iota(xy) = iota(x) iota(y)"));
        let mut inter_s = Check::new(tag("iota sigma_p = sigma iota"));
        let mut inter_r = Check::new(tag("iota rho~_p = rho~ iota"));
        for i in 0..100 {
            let x = sample::p_power_group_ring(&mut r, &ring, p, 4, 4);
            let y = sample::p_power_group_ring(&mut r, &ring, p, 4, 4);
            let (ix, iy) = (iota(&x, p).expect("labels"), iota(&y, p).expect("labels"));
            hom.record(iota(&gmul(&x, &y), p).expect("labels") == ix.mul(&iy).expect("same ring"), || {
                format!("instance {i}: x = {x}, y = {y}")
            });
            inter_s.record(iota(&x.sigma(p), p).expect("labels") == ix.sigma(), || format!("instance {i}: x = {x}"));
            inter_r.record(iota(&x.rho_tilde(p), p).expect("labels") == ix.rho(), || format!("instance {i}: x = {x}"));
        }
        checks.extend([hom, inter_s, inter_r]);

        let mut kernel = Check::new(tag("f^p = 0 on Ker sigma_p"));
        for i in 0..100 {
            let f = sample::ker_sigma(&mut r, &ring, p, 4, 4);
            kernel.record(f.ker_sigma_nilpotency() == Some(true), || format!("instance {i}: f = {f}"));
        }
        checks.push(kernel);

        let mut tau = Check::new(tag("tau relations for m, n <= 5"));
        tau.record(tau_relations_hold(&ring, p, 5).expect("char p"), String::new);
        checks.push(tau);

        let mut vanish = Check::new(tag("mu*_p mu~_p = 0"));
        let (mt, ms) = (CpElem::mu_tilde(&ring, p).expect("char p"), CpElem::mu_star(&ring, p).expect("char p"));
        vanish.record(ms.mul(&mt).expect("same ring").is_zero(), String::new);
        checks.push(vanish);

        let mut mats = Check::new(tag("structure matrices at level <= 4"));
        for level in 0..=4 {
            mats.record(
                pattern_matches(&mt, level, |d| Some(d.alpha(p))),
                || format!("mu~ at level {level}"),
            );
            mats.record(pattern_matches(&ms, level, |d| d.times_p_pow(p, 1)), || format!("mu* at level {level}"));
            for a in PAdicFrac::grid(p, level.min(2)) {
                let delta = CpElem::delta(&ring, p, a.clone()).expect("char p");
                mats.record(pattern_matches(&delta, level, |d| d.add(&a)), || format!("delta({a}) at level {level}"));
            }
        }
        checks.push(mats);

        let mut sep = Check::new(tag("nonzero elements are separated within level 6"));
        for i in 0..100 {
            let x = sample::nonzero_cp(&mut r, &ring, p, 3, 3, 4);
            let ok = matches!(x.separating_vector(6), Some((_, img)) if !img.is_empty());
            sep.record(ok, || format!("instance {i}: x = {x}"));
        }
        checks.push(sep);
    }
    Report {
        suite: "charp".into(),
        seed,
        checks,
    }
}

/// Reduction of the abelian part to denominators prime to `p`.
pub fn reduction(seed: u64) -> Report {
    let mut checks = Vec::new();
    for p in CHARP_PRIMES {
        let ring = Ring::prime_field(p).expect("prime");
        let mut r = rng(seed, 200 + p);
        let red = |x: &GroupRingElem| reduce_mod_p(x, p);
        let mut hom = Check::new(format!("p = {p}: reduction is a ring map"));
        let mut inter = Check::new(format!("p = {p}: reduction commutes with sigma_n, n <= 12"));
        for i in 0..100 {
            let x = sample::group_ring(&mut r, &ring, 4, 24);
            let y = sample::group_ring(&mut r, &ring, 4, 24);
            let sum_ok = red(&x.add(&y).expect("same ring")) == red(&x).add(&red(&y)).expect("same ring");
            let prod_ok = red(&gmul(&x, &y)) == gmul(&red(&x), &red(&y));
            let unit_ok = red(&GroupRingElem::one(&ring)) == GroupRingElem::one(&ring);
            hom.record(sum_ok && prod_ok && unit_ok, || format!("instance {i}: x = {x}, y = {y}"));
            for n in 1..=12u64 {
                inter.record(red(&x.sigma(n)) == red(&x).sigma(n), || format!("instance {i}: n = {n}, x = {x}"));
            }
        }
        let mut inverse = Check::new(format!("p = {p}: sigma_p inverts reduced_rho on e(r), den <= 30"));
        for den in (1..=30u64).filter(|d| d % p != 0) {
            for num in (0..den).filter(|k| k.gcd(&den) == 1) {
                let e = GroupRingElem::e(&ring, QmodZ::new(num, den).expect("positive"));
                let back = reduced_rho(p, &e.sigma(p), p).expect("unit");
                let forth = reduced_rho(p, &e, p).expect("unit").sigma(p);
                inverse.record(back == e && forth == e, || format!("r = {num}/{den}"));
            }
        }
        checks.extend([hom, inter, inverse]);
    }
    Report {
        suite: "reduction".into(),
        seed,
        checks,
    }
}

/// The fields used by the Frobenius suite.
pub fn frobenius_fields() -> Vec<Ring> {
    ["fp:2", "fp:3", "fq:2,2", "fq:3,2"]
        .iter()
        .map(|t| t.parse().expect("valid ring tag"))
        .collect()
}

/// `(σ_{p^ℓ} ⊗ Frob^ℓ)(f) = f^{p^ℓ}` over `F_2, F_3, F_4, F_9`.
pub fn frobenius(seed: u64) -> Report {
    let mut checks = Vec::new();
    for ring in frobenius_fields() {
        let mut r = rng(seed, 300 + ring.characteristic());
        let mut check = Check::new(format!("{}: Frobenius identity, l <= 3", ring.name()));
        for i in 0..100 {
            let f = sample::group_ring(&mut r, &ring, 4, 12);
            for l in 1..=3 {
                let ok = f.frobenius_identity_holds(l).unwrap_or(false);
                check.record(ok, || format!("instance {i}: l = {l}, f = {f}"));
            }
        }
        checks.push(check);
    }
    Report {
        suite: "frobenius".into(),
        seed,
        checks,
    }
}

/// The ν-presentation, the map `φ` and its rescaled form `ψ`.
pub fn hecke(seed: u64) -> Report {
    let ring = z();
    let mut r = rng(seed, 400);
    let nu = |n: u64| HeckeElem::nu(&ring, n).expect("positive");
    let nu_s = |n: u64| HeckeElem::nu_star(&ring, n).expect("positive");
    let hm = |a: &HeckeElem, b: &HeckeElem| a.mul(b).expect("same ring");

    let mut rels = Check::new("phi transports the nu relations, n, m <= 12");
    for n in 1..=12u64 {
        rels.record(nu(n).phi() == mu_t(&ring, n) && nu_s(n).phi() == mu_s(&ring, n), || format!("n = {n}"));
        rels.record(hm(&nu_s(n), &nu(n)) == HeckeElem::one(&ring).scale(&ring.from_i64(n as i64)), || {
            format!("nu*_{n} nu_{n}")
        });
        for m in 1..=12u64 {
            rels.record(hm(&nu(n), &nu(m)) == nu(n * m) && hm(&nu_s(n), &nu_s(m)) == nu_s(n * m), || {
                format!("n = {n}, m = {m}")
            });
            if n.gcd(&m) == 1 {
                rels.record(hm(&nu(n), &nu_s(m)) == hm(&nu_s(m), &nu(n)), || format!("coprime n = {n}, m = {m}"));
            }
        }
        for i in 0..10 {
            let x = sample::group_ring(&mut r, &ring, 3, 24);
            let h = HeckeElem::embed_gr(&x);
            let conj = hm(&hm(&nu(n), &h), &nu_s(n)) == HeckeElem::embed_gr(&x.rho_tilde(n));
            let left = hm(&nu_s(n), &h) == hm(&HeckeElem::embed_gr(&x.sigma(n)), &nu_s(n));
            rels.record(conj && left, || format!("n = {n}, instance {i}: x = {x}"));
        }
    }
    for i in 0..100 {
        let a = HeckeElem::phi_inv(&sample::bc(&mut r, &ring, 2, 12, 24));
        let b = HeckeElem::phi_inv(&sample::bc(&mut r, &ring, 2, 12, 24));
        rels.record(hm(&a, &b).phi() == mul(&a.phi(), &b.phi()), || format!("instance {i}: a = {a}, b = {b}"));
    }

    let mut witness = Check::new("phi(nu*_2) = mu*_2 differs from phi(nu_2)* = 2 mu*_2");
    let (_, left, right) = default_mismatch_witness();
    let qr = q();
    let expected_right = mu_s(&qr, 2).scale(&qr.from_i64(2));
    witness.record(left == mu_s(&qr, 2) && right == expected_right && left != right, || {
        format!("phi(w*) = {left}, phi(w)* = {right}")
    });

    let sq = Ring::SqrtRationals;
    let mut star = Check::new("psi(h*) = psi(h)*");
    for i in 0..100 {
        let h = HeckeElem::phi_inv(&sample::bc(&mut r, &sq, 2, 12, 24));
        let lhs = h.star().and_then(|s| s.psi());
        let rhs = h.psi().and_then(|s| s.star());
        star.record(lhs.is_ok() && lhs == rhs, || format!("instance {i}: h = {h}"));
    }

    let mut scaling = Check::new("sigma_i_half phi = psi on monomials, a, b <= 12");
    for a in 1..=12u64 {
        for b in 1..=12u64 {
            let rlabel = sample::qmodz(&mut r, 24);
            let h = match HeckeElem::nu(&sq, a)
                .and_then(|x| x.mul(&HeckeElem::e(&sq, rlabel.clone())))
                .and_then(|x| x.mul(&HeckeElem::nu_star(&sq, b).expect("positive")))
            {
                Ok(h) => h,
                Err(e) => {
                    scaling.record(false, || e.to_string());
                    continue;
                }
            };
            let lhs = sigma_i_half(&h.phi());
            scaling.record(lhs.is_ok() && lhs == h.psi(), || format!("a = {a}, b = {b}, r = {rlabel}"));
        }
    }
    let mut report = Report::new("hecke", seed);
    report.checks = vec![rels, witness, star, scaling];
    report
}

/// Suite names accepted on the command line.
pub const SUITES: &[&str] = &["relations", "associativity", "rep-oracle", "charp", "frobenius", "hecke"];

/// Runs a named suite. `relations` bundles the presentation, idempotent and
/// transfer checks; `charp` includes the reduction checks.
pub fn run(name: &str, seed: u64) -> Option<Report> {
    let mut report = match name {
        "relations" => presentation(seed).merge(idempotents(seed)).merge(transfer(seed)),
        "associativity" => associativity(seed),
        "rep-oracle" => rep_oracle(seed),
        "charp" => charp(seed).merge(reduction(seed)),
        "frobenius" => frobenius(seed),
        "hecke" => hecke(seed),
        _ => return None,
    };
    report.suite = name.to_string();
    Some(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_counts_and_keeps_few_failures() {
        let mut c = Check::new("x");
        for i in 0..10 {
            c.record(i % 2 == 0, || format!("odd {i}"));
        }
        assert_eq!((c.passed, c.total, c.failures.len()), (5, 10, 5));
        assert!(!c.ok());
        assert!(!Check::new("empty").ok());
    }

    #[test]
    fn unknown_suite() {
        assert!(run("nope", 0).is_none());
    }

    #[test]
    fn failure_output_names_seed() {
        let mut r = Report::new("demo", 42);
        let mut c = Check::new("always fails");
        c.record(false, || "instance 0".into());
        r.checks.push(c);
        let text = r.render();
        assert!(text.contains("seed 42: instance 0"));
        assert!(text.ends_with("FAILED"));
    }
}
