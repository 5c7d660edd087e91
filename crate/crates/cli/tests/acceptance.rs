//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use qsusy_cli::config::SuiteConfig;
use qsusy_cli::dsl::parse;
use qsusy_cli::report::{Check, Report, Status};
use qsusy_cli::suites::{run_suite, Suite};
use std::process::Command;
use std::time::Duration;

struct Verdict {
    passed: bool,
    detail: String,
}

fn checks<'a>(r: &'a Report, prefix: &str) -> Vec<&'a Check> {
    r.checks.iter().filter(|c| c.id.starts_with(prefix)).collect()
}

fn elapsed(cs: &[&Check]) -> Duration {
    Duration::from_micros(cs.iter().filter_map(|c| c.duration_us).sum())
}

/// All listed checks exist, pass, and together run within `budget`.
fn gated(r: &Report, prefixes: &[&str], budget: Duration) -> Verdict {
    let mut cs = Vec::new();
    let mut missing = Vec::new();
    for p in prefixes {
        let found = checks(r, p);
        if found.is_empty() {
            missing.push(p.to_string());
        }
        cs.extend(found);
    }
    let failed: Vec<_> = cs.iter().filter(|c| c.status != Status::Pass).map(|c| c.id.clone()).collect();
    let t = elapsed(&cs);
    let in_budget = t <= budget;
    let mut detail = format!("{} checks in {:.2} s (budget {} s)", cs.len(), t.as_secs_f64(), budget.as_secs());
    if !missing.is_empty() {
        detail += &format!("; missing {missing:?}");
    }
    if !failed.is_empty() {
        detail += &format!("; failed {failed:?}");
    }
    if !in_budget {
        detail += "; over budget";
    }
    Verdict { passed: missing.is_empty() && failed.is_empty() && in_budget, detail }
}

fn detail_u64(r: &Report, id: &str, key: &str) -> Option<u64> {
    r.checks.iter().find(|c| c.id == id)?.details.get(key)?.as_u64()
}

fn secs(n: u64) -> Duration {
    Duration::from_secs(n)
}

fn qsusy(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_qsusy")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_12() -> Verdict {
    let corpus: Vec<&str> =
        include_str!("data/corpus.txt").lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).collect();
    let round_trip = corpus.iter().all(|line| match parse(line) {
        Ok(ast) => parse(&ast.to_string()).as_ref() == Ok(&ast),
        Err(_) => false,
    });
    let (c1, a) = qsusy(&["check", "hopf", "--no-timestamp"]);
    let (c2, b) = qsusy(&["check", "hopf", "--no-timestamp"]);
    let deterministic = a == b && !a.is_empty();
    let reparsed = Report::from_json(std::str::from_utf8(&a).unwrap_or("")).map(|r| r.to_json().into_bytes() == a).unwrap_or(false);
    let (fail_code, fail_out) = qsusy(&["eval", "E*F", "--equals", "F*E", "--no-timestamp"]);
    let witness = Report::from_json(std::str::from_utf8(&fail_out).unwrap_or(""))
        .map(|r| r.checks[0].witness.is_some())
        .unwrap_or(false);
    let (ok_code, _) = qsusy(&["eval", "E*F - F*E", "--equals", "(K^2 - K^-2)/(q - 1/q)"]);
    let (bad_code, _) = qsusy(&["check", "uq", "--max-degree", "1"]);
    let exit_contract = c1 == 0 && c2 == 0 && fail_code == 1 && witness && ok_code == 0 && bad_code == 2;
    Verdict {
        passed: round_trip && deterministic && reparsed && exit_contract,
        detail: format!(
            "{} corpus expressions round-trip: {round_trip}; byte-identical reports: {deterministic}; JSON re-parse: {reparsed}; exit codes pass/fail/config = {ok_code}/{fail_code}/{bad_code}",
            corpus.len()
        ),
    }
}

fn main() {
    let cfg = SuiteConfig::default();
    let all = run_suite(Suite::All, &cfg).expect("default configuration is valid");

    let mut verdicts: Vec<(&str, Verdict)> = Vec::new();
    verdicts.push(("semi-Hopf partition at N=2", gated(&all, &["semihopf.class.", "semihopf.partition"], secs(1))));
    verdicts.push(("adjoint action reproduces (anti)commutators", gated(&all, &["semihopf.adjoint-bracket."], secs(5))));
    let mut v3 = gated(&all, &["jacobi.classical-sweep"], secs(60));
    let triples = detail_u64(&all, "jacobi.classical-sweep", "triples");
    v3.detail += &format!("; {} triples", triples.unwrap_or(0));
    v3.passed &= triples == Some(20 * 20 * 20);
    verdicts.push(("classical graded Jacobi sweep", v3));
    verdicts.push(("bialgebra axioms on every generator", gated(&all, &["hopf.bialgebra."], secs(1))));
    verdicts.push((
        "U_q(sl2) relations, Yang-Baxter, intertwining",
        gated(
            &all,
            &["uq.rep.relations.spin-1/2", "uq.rep.relations.spin-1", "uq.rep.relations.spin-3/2", "uq.ybe.spin-1/2", "uq.ybe.spin-1", "uq.rmatrix.intertwining."],
            secs(30),
        ),
    ));
    verdicts.push((
        "quantum trace, metric inverse, invariance",
        gated(&all, &["uq.qtrace.conjugation.", "uq.metric.inverse.", "uq.metric.invariance."], secs(30)),
    ));
    verdicts.push(("classical limits", gated(&all, &["uq.classical.flip", "uq.classical.metric-orthonormal", "uq.classical.sl2-constants"], secs(30))));
    let mut v8 = gated(&all, &["uq.qlie.basis", "uq.qlie.adjoint-consistency"], secs(30));
    let degree = all.checks.iter().find(|c| c.id == "uq.qlie.basis").and_then(|c| c.details["degree"].as_u64());
    v8.passed &= degree == Some(2);
    verdicts.push(("quantum Lie algebra at degree 2", v8));
    verdicts.push(("adjoint metric ratios q^(+-2) and (q+1/q)^2", gated(&all, &["uq.casimir-ratios"], secs(30))));
    let mut v10 = gated(&all, &["superspace.chirality", "superspace.wz-lagrangian", "superspace.sym-abelian"], secs(30));
    if let Some(c) = all.checks.iter().find(|c| c.id == "superspace.sym-abelian") {
        let d = &c.details;
        v10.detail += &format!(
            "; F^2 {} /g^2, FFdual {} theta/pi^2, D^2 {} /g^2",
            d["f_squared_per_inverse_g2"], d["f_dual_per_theta_over_pi2"], d["d_squared_per_inverse_g2"]
        );
    }
    verdicts.push(("superspace chirality and Lagrangians", v10));

    let info: Vec<&Check> = ["uq.coproduct-shape", "jacobi.quantum-candidate-gamma"]
        .iter()
        .filter_map(|id| all.checks.iter().find(|c| c.id == *id))
        .collect();
    let info_ok = info.len() == 2 && info.iter().all(|c| c.status == Status::ReportOnly);
    let mut gated_only = all.clone();
    gated_only.checks.retain(|c| c.status != Status::ReportOnly);
    gated_only.finish();
    let never_gates = all.exit_code() == gated_only.exit_code();
    let (bin_code, _) = qsusy(&["check", "jacobi", "--no-timestamp"]);
    let witnesses: Vec<String> = info.iter().map(|c| format!("{}: {}", c.id, c.witness.as_deref().unwrap_or("holds"))).collect();
    verdicts.push((
        "report-only items never gate",
        Verdict { passed: info_ok && never_gates && bin_code == 0, detail: witnesses.join("; ") },
    ));
    verdicts.push(("CLI round-trip, determinism, exit codes", criterion_12()));

    let mut failures = 0;
    for (k, (name, v)) in verdicts.iter().enumerate() {
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag}: {name} ({})", k + 1, v.detail);
        failures += usize::from(!v.passed);
    }
    println!("{} of {} criteria passed", verdicts.len() - failures, verdicts.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
