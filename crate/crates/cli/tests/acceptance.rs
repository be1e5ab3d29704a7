//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --release -p charclass-cli --test acceptance -- --nocapture`.

#[path = "../../core/tests/common/brute.rs"]
mod brute;

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use charclass::chow::parse_degree_list;
use charclass::random::random_form;
use charclass::*;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

const TWISTED: &str = "y^2-x*z, y*z-x*w, z^2-y*w";
const WHITNEY: &str = "x^2*w - y^2*z";
const CENSOR: &str = "2*p0*p1*p2 + p1^2*p2 + p1*p2^2 - p0^2*p12 + p1*p2*p12";
const BOUNDARY: &str = "p0^2*p1*p2*p12 + p0*p1^2*p2*p12 + p0*p1*p2^2*p12 + p0*p1*p2*p12^2";
const SEED: &str = "20240101";

struct Run {
    code: Option<i32>,
    stdout: String,
}

fn ccc(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ccc")).args(args).output().expect("binary runs");
    Run { code: out.status.code(), stdout: String::from_utf8(out.stdout).expect("utf-8").trim_end().to_string() }
}

struct Tally {
    failed: Vec<String>,
}

impl Tally {
    fn report(&mut self, id: &str, what: &str, started: Instant, limit: Duration, checks: Vec<(String, bool)>) {
        let elapsed = started.elapsed();
        let mut problems: Vec<String> = checks.into_iter().filter(|c| !c.1).map(|c| c.0).collect();
        if elapsed > limit {
            problems.push(format!("took {elapsed:.1?}, limit {limit:?}"));
        }
        if problems.is_empty() {
            println!("PASS {id} {what} ({elapsed:.2?})");
        } else {
            println!("FAIL {id} {what} ({elapsed:.2?}): {}", problems.join("; "));
            self.failed.push(id.to_string());
        }
    }
}

fn check(label: impl Into<String>, ok: bool) -> (String, bool) {
    (label.into(), ok)
}

fn eq(label: &str, got: &str, want: &str) -> (String, bool) {
    (format!("{label}: got {got:?}, want {want:?}"), got == want)
}

fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names, FieldPrime::default()).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Independent residual round trip: recompute every residual degree and
/// substitute the reported Segre degrees into the residual identities.
fn round_trip_holds(ideal: &Ideal, report: &ClassReport, policy: &RandomPolicy) -> bool {
    let (Some(d), Ok(k)) = (report.d, usize::try_from(report.k)) else { return true };
    let n = report.n;
    let dd = BigInt::from(d);
    (0..=k).all(|p| {
        let e = n - p;
        let r = residual_degree(ideal, d, e, policy).unwrap();
        let mut rhs = r;
        for q in p..=k {
            rhs += hilbert_binomial(e, q - p) * dd.pow((q - p) as u32) * &report.degrees[k - q];
        }
        rhs == dd.pow(e as u32)
    })
}

fn hilbert_binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn chern_identity(ideal: &Ideal, policy: &RandomPolicy) -> bool {
    let s = segre_class(ideal, policy).unwrap();
    let c = chern_class(ideal, policy).unwrap();
    let n = s.n;
    c.chow == ChowClass::one_plus_dh_pow(n, 1, n as i64 + 1).mul(&s.chow).unwrap()
}

#[test]
fn acceptance() {
    let mut t = Tally { failed: Vec::new() };
    let rx = ["--ring", "x,y,z,w"];
    let rp = ["--ring", "p0,p1,p2,p12"];

    // 1
    let start = Instant::now();
    let list = ccc(&["chern", rx[0], rx[1], "--ideal", TWISTED, "--seed", SEED]);
    let poly = ccc(&["chern", rx[0], rx[1], "--ideal", TWISTED, "--seed", SEED, "--format", "poly"]);
    t.report(
        "1",
        "twisted cubic chern",
        start,
        Duration::from_secs(10),
        vec![
            check("exit code", list.code == Some(0) && poly.code == Some(0)),
            eq("list", &list.stdout, "{3, 2}"),
            eq("poly", &poly.stdout, "3*H^2 + 2*H^3"),
        ],
    );

    // 2
    let start = Instant::now();
    let w = ccc(&["segre", rx[0], rx[1], "--ideal", WHITNEY, "--singular-locus", "--seed", SEED]);
    t.report(
        "2",
        "Whitney umbrella singular locus segre",
        start,
        Duration::from_secs(60),
        vec![check("exit code", w.code == Some(0)), eq("list", &w.stdout, "{1, 0}")],
    );

    // 3
    let start = Instant::now();
    let both = format!("{CENSOR}, {BOUNDARY}");
    let e1 = ccc(&["euler", rp[0], rp[1], "--ideal", CENSOR, "--seed", SEED]);
    let e2 = ccc(&["euler", rp[0], rp[1], "--ideal", &both, "--seed", SEED]);
    let e3 = ccc(&["euler-complement", rp[0], rp[1], "--ideal", CENSOR, "--ideal2", BOUNDARY, "--seed", SEED]);
    t.report(
        "3",
        "random censoring Euler characteristics",
        start,
        Duration::from_secs(30 * 60),
        vec![
            eq("euler", &e1.stdout, "5"),
            eq("euler with boundary", &e2.stdout, "2"),
            eq("complement", &e3.stdout, "3"),
        ],
    );

    // 4
    let start = Instant::now();
    let e = ccc(&["euler", rx[0], rx[1], "--ideal", TWISTED, "--seed", SEED]);
    t.report(
        "4",
        "twisted cubic Euler characteristic",
        start,
        Duration::from_secs(60),
        vec![eq("euler", &e.stdout, "2")],
    );

    // 5
    let start = Instant::now();
    let mut checks = Vec::new();
    let hypersurfaces: [(&str, &str, i64); 10] = [
        ("x,y,z", "x + 2*y - z", 1),
        ("x,y,z", "x^2 + y^2 + z^2", 2),
        ("x,y,z", "x*y", 2),
        ("x,y,z", "y^2*z - x^3 - x^2*z", 3),
        ("x,y,z", "x*y*z", 3),
        ("x,y,z,w", "x - y + 3*w", 1),
        ("x,y,z,w", "x*w - y*z", 2),
        ("x,y,z,w", "x^2 + y^2 + z^2", 2),
        ("x,y,z,w", "x^3 + y^3 + z^3 + w^3", 3),
        ("x,y,z,w", "x*y*z + y*z*w", 3),
    ];
    for (vars, f, d) in hypersurfaces {
        let n = vars.split(',').count() - 1;
        let want = ChowClass::from_i64(n, &[0, d]).mul(&ChowClass::one_plus_dh_pow(n, d, -1)).unwrap();
        let got = ccc(&["segre", "--ring", vars, "--ideal", f, "--seed", SEED, "--format", "poly"]);
        checks.push(eq(&format!("segre {f}"), &got.stdout, &want.to_string()));
    }
    for (vars, n) in [("x,y,z,w", 3usize), ("x,y,z,w,v", 4)] {
        let names: Vec<&str> = vars.split(',').collect();
        for c in 1..=3 {
            let gens = names[..c].join(", ");
            let hc = ChowClass::hyperplane_power(n, c);
            let s_want = hc.mul(&ChowClass::one_plus_dh_pow(n, 1, -(c as i64))).unwrap();
            let c_want = hc.mul(&ChowClass::one_plus_dh_pow(n, 1, (n + 1 - c) as i64)).unwrap();
            let s = ccc(&["segre", "--ring", vars, "--ideal", &gens, "--seed", SEED, "--format", "poly"]);
            let ch = ccc(&["chern", "--ring", vars, "--ideal", &gens, "--seed", SEED, "--format", "poly"]);
            checks.push(eq(&format!("segre P^{n} codim {c}"), &s.stdout, &s_want.to_string()));
            checks.push(eq(&format!("chern P^{n} codim {c}"), &ch.stdout, &c_want.to_string()));
        }
    }
    t.report("5", "closed-form oracle suite", start, Duration::from_secs(5 * 60), checks);

    // 6
    let start = Instant::now();
    let nodal = ccc(&["csm", "--ring", "x,y,z", "--ideal", "y^2*z - x^3 - x^2*z", "--seed", SEED, "--format", "poly"]);
    let cusp = ccc(&["csm", "--ring", "x,y,z", "--ideal", "y^2*z - x^3", "--seed", SEED, "--format", "poly"]);
    let nodal_chi = ccc(&["euler", "--ring", "x,y,z", "--ideal", "y^2*z - x^3 - x^2*z", "--seed", SEED]);
    let cusp_chi = ccc(&["euler", "--ring", "x,y,z", "--ideal", "y^2*z - x^3", "--seed", SEED]);
    t.report(
        "6",
        "singular plane cubic CSM classes",
        start,
        Duration::from_secs(2 * 60),
        vec![
            eq("nodal", &nodal.stdout, "3*H + H^2"),
            eq("nodal chi", &nodal_chi.stdout, "1"),
            eq("cuspidal", &cusp.stdout, "3*H + 2*H^2"),
            eq("cuspidal chi", &cusp_chi.stdout, "2"),
        ],
    );

    // 7
    let start = Instant::now();
    let mut checks = Vec::new();

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut agreed = 0;
    for case in 0..60 {
        let nv = rng.random_range(2..=4usize);
        let names: Vec<String> = (0..nv).map(|i| format!("x{i}")).collect();
        let r = Ring::new(&names, FieldPrime::default()).unwrap();
        let mut srng = SeededRng::new(rng.random());
        let gens: Vec<Polynomial> = (0..rng.random_range(1..=3))
            .map(|_| {
                let d = rng.random_range(1..=3);
                let dense = random_form(d, &r, &mut srng);
                let keep = rng.random_range(1..=3usize);
                Polynomial::from_terms(&r, dense.terms().iter().take(keep).copied().collect())
            })
            .collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let ok =
            (0..=6u32).all(|k| ideal.hilbert().hilbert_function(k as usize) == brute::brute_force_hf(&r, &gens, k));
        if ok {
            agreed += 1;
        } else {
            checks.push(check(format!("Hilbert oracle case {case}"), false));
        }
    }
    checks.push(check(format!("Hilbert oracle agreed on {agreed}/60"), agreed == 60));

    let pol = RandomPolicy::new(SEED.parse().unwrap());
    let r3 = ring(&["x", "y", "z", "w"]);
    let mut segre_inputs =
        vec![Ideal::parse(&r3, TWISTED).unwrap(), jacobian_ideal(&parse_polynomial(WHITNEY, &r3).unwrap()).unwrap()];
    for (vars, f, _) in hypersurfaces {
        let names: Vec<&str> = vars.split(',').collect();
        segre_inputs.push(Ideal::parse(&ring(&names), f).unwrap());
    }
    for c in 1..=3 {
        segre_inputs.push(Ideal::parse(&r3, &["x", "y", "z"][..c].join(", ")).unwrap());
    }
    let mut trips = 0;
    let mut identities = 0;
    for ideal in &segre_inputs {
        let s = segre_class(ideal, &pol).unwrap();
        trips += round_trip_holds(ideal, &s, &pol) as usize;
        identities += chern_identity(ideal, &pol) as usize;
    }
    checks.push(check(
        format!("residual round trip on {trips}/{} runs", segre_inputs.len()),
        trips == segre_inputs.len(),
    ));
    checks.push(check(
        format!("chern = (1+H)^(n+1) segre on {identities}/{} runs", segre_inputs.len()),
        identities == segre_inputs.len(),
    ));

    let mut algebra = 0;
    for _ in 0..100 {
        let n = rng.random_range(1..=6usize);
        let v: Vec<i64> = (0..=n).map(|_| rng.random_range(-1000..1000)).collect();
        let a = ChowClass::from_i64(n, &v);
        let (d1, d2) = (rng.random_range(-9..10i64), rng.random_range(-9..10i64));
        if a.dual().dual() == a && a.tensor_line(d1).tensor_line(d2) == a.tensor_line(d1 + d2) {
            algebra += 1;
        }
    }
    checks.push(check(format!("dual involution and twist composition on {algebra}/100"), algebra == 100));

    let runs: Vec<Vec<&str>> = vec![
        vec!["chern", rx[0], rx[1], "--ideal", TWISTED],
        vec!["segre", rx[0], rx[1], "--ideal", WHITNEY, "--singular-locus"],
        vec!["euler", rp[0], rp[1], "--ideal", CENSOR],
        vec!["euler", rp[0], rp[1], "--ideal", &both],
        vec!["euler-complement", rp[0], rp[1], "--ideal", CENSOR, "--ideal2", BOUNDARY],
        vec!["euler", rx[0], rx[1], "--ideal", TWISTED],
    ];
    for args in &runs {
        let outs: Vec<String> =
            ["1", "2", "3"].iter().map(|s| ccc(&[&args[..], &["--seed", s]].concat()).stdout).collect();
        checks.push(check(
            format!("seed independence for {}: {outs:?}", args[0]),
            outs.iter().all(|o| o == &outs[0] && !o.is_empty()),
        ));
    }
    for args in &runs {
        let full = [&args[..], &["--seed", "99", "--format", "json"]].concat();
        let (a, b) = (ccc(&full), ccc(&full));
        checks.push(check(format!("byte-identical rerun for {}", args[0]), a.stdout == b.stdout && a.code == Some(0)));
    }
    let degrees = parse_degree_list(&ccc(&["chern", rx[0], rx[1], "--ideal", TWISTED, "--seed", "5"]).stdout);
    checks.push(check("list output parses", degrees.map(|d| d == big(&[3, 2])).unwrap_or(false)));
    t.report("7", "property suites", start, Duration::from_secs(10 * 60), checks);

    assert!(t.failed.is_empty(), "failed criteria: {:?}", t.failed);
}
