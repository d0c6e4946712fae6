use std::collections::BTreeSet;

use hcpn_core::chernvec::{
    chern_from_multiplicities, closed_form_w, moment_vector, realizable, w_matrix, ChernVector, Decomposition,
};
use hcpn_core::exactmath::{is_integral, solve_exact, Monomial, Var};
use hcpn_core::homotopy::{
    acs_criterion_cp6, acs_scan_cp4, acs_scan_cp6, acs_search_cp4, acs_search_cp6, cp4_divisor_target, cp5_structure,
    cp6_exists, cp6_triples, divisor_target_cp4, symbolic_cp6_numerators, symbolic_verify_cp5, valid_cp4_n,
    AcsSolution, Cp6Criterion, HomotopyCp, SearchWindow,
};
use hcpn_core::ktheory::{real_reduce, KClass, KOClass};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::commands::{chern_series, divisor_targets, mod31, pontrjagin_omega};
use crate::golden;
use crate::output::{num, Outcome, Status};

pub const SUITES: [&str; 6] = ["ktheory", "chernvec", "cp4", "cp5", "cp6", "all"];

struct Check {
    name: &'static str,
    passed: bool,
    detail: Value,
}

fn check(name: &'static str, passed: bool, detail: Value) -> Check {
    Check { name, passed, detail }
}

fn golden_check(name: &'static str, computed: &str, golden: &str) -> Check {
    let diff = golden::diff(computed, golden);
    check(name, diff.is_empty(), json!({ "diff": diff }))
}

/// A comparison against a value from the literature that the computation
/// does not reproduce; reported but not counted as a failure.
struct Note {
    name: &'static str,
    matches: bool,
    detail: Value,
}

#[derive(Default)]
struct Report {
    checks: Vec<Check>,
    notes: Vec<Note>,
}

/// `KO(CP^d)` class from leading coefficients, zero-padded.
fn ko(d: usize, c: &[i64]) -> KOClass {
    let len = if d == 4 { 3 } else { 4 };
    let mut v = c.to_vec();
    v.resize(len, 0);
    KOClass::from_ints(d, &v).expect("supported dimension")
}

fn ktheory(r: &mut Report) {
    let mut bad = Vec::new();
    for d in [4, 5, 6] {
        for i in 0..=d {
            let x = KClass::l_pow(d, i);
            match real_reduce(&x) {
                Ok(y) if y.complexify() == &x + &x.conjugate() => {}
                _ => bad.push(format!("d={d} L^{i}")),
            }
        }
    }
    r.checks.push(check("c_after_r_is_one_plus_t", bad.is_empty(), json!({ "counterexamples": bad })));

    let mut bad = Vec::new();
    for d in [4, 5, 6] {
        for j in 0..=3 {
            let Ok(y) = KOClass::omega_pow(d, j) else { continue };
            if real_reduce(&y.complexify()).ok() != Some(y.scale(&BigInt::from(2))) {
                bad.push(format!("d={d} w^{j}"));
            }
        }
    }
    r.checks.push(check("r_after_c_is_two", bad.is_empty(), json!({ "counterexamples": bad })));

    let mut bad = Vec::new();
    for d in [4, 5, 6] {
        let w = KOClass::omega(d).expect("supported");
        let psi2 = w.adams(2).expect("power of two");
        let psi4 = w.adams(4).expect("power of two");
        let expected4 = match d {
            6 => ko(d, &[0, 16, 20, 8]),
            _ => ko(d, &[0, 16, 20]),
        };
        if psi2 != ko(d, &[0, 4, 1]) {
            bad.push(format!("d={d} psi2(w) = {psi2}"));
        }
        if psi4 != expected4 || psi2.adams(2).ok() != Some(psi4.clone()) {
            bad.push(format!("d={d} psi4(w) = {psi4}"));
        }
    }
    r.checks.push(check("adams_operations", bad.is_empty(), json!({ "counterexamples": bad })));

    let h = |j| KClass::h_pow(5, j);
    let kernel = [&h(1) - &h(-1), &h(2) - &h(-2), KClass::from_ints(5, &[0, 0, 0, 0, 0, 2])];
    let killed = kernel.iter().all(|x| real_reduce(x).map(|y| y.is_zero()).unwrap_or(false));
    r.checks.push(check("r_kills_mu1_mu2_2l5", killed, Value::Null));

    let hits = [
        (KClass::l(5), KOClass::omega_pow(5, 1)),
        (KClass::from_ints(5, &[0, -2, 1]), KOClass::omega_pow(5, 2)),
        (KClass::l_pow(5, 5), KOClass::omega_pow(5, 3)),
    ];
    let surjective = hits.iter().all(|(x, w)| real_reduce(x).ok() == w.clone().ok());
    r.checks.push(check("r_hits_omega_powers", surjective, Value::Null));

    for (name, d, g) in [
        ("pontrjagin_omega_d4", 4, golden::PONTRJAGIN_OMEGA_D4),
        ("pontrjagin_omega_d6", 6, golden::PONTRJAGIN_OMEGA_D6),
    ] {
        let t = pontrjagin_omega(d).expect("supported dimension");
        r.checks.push(golden_check(name, &t.to_csv(), g));
    }
    r.checks.push(golden_check("chern_series_d5", &chern_series().to_csv(), golden::CHERN_SERIES_D5));
}

fn chernvec(r: &mut Report, seed: u64) {
    let mut bad = Vec::new();
    for d in 1..=8 {
        let w = w_matrix(d);
        for m in -30..=30i64 {
            let m = BigInt::from(m);
            let closed = closed_form_w(&m, d);
            let solved = solve_exact(&w, &moment_vector(&m, d));
            if !closed.iter().all(is_integral) || solved.as_ref().ok() != Some(&closed) {
                bad.push(format!("d={d} m={m}"));
            }
        }
    }
    r.checks.push(check("closed_form_basis", bad.is_empty(), json!({ "counterexamples": bad })));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for d in 2..=6usize {
        for _ in 0..200 {
            let a: Vec<i64> = (0..d).map(|_| rng.gen_range(-20..=20)).collect();
            let dec = Decomposition::from_ints(&a);
            if realizable(&chern_from_multiplicities(&dec)).ok() != Some(dec) {
                bad.push(a);
            }
        }
    }
    r.checks.push(check(
        "realizability_roundtrip",
        bad.is_empty(),
        json!({ "seed": seed, "counterexamples": bad }),
    ));
    let rejected = realizable(&ChernVector::from_ints(&[0, 1, 0, 0])).is_err();
    r.checks.push(check("rejects_0_1_0_0", rejected, Value::Null));
}

fn cp4(r: &mut Report) {
    let t = divisor_targets(4, 34).expect("d = 4");
    r.checks.push(golden_check("divisor_targets_d4", &t.to_csv(), golden::DIVISOR_TARGETS_D4));

    let mut bad = Vec::new();
    for m in [-22i64, -8, 0, 6, 14, 20, 28, 34] {
        let m = BigInt::from(m);
        let Some(n) = valid_cp4_n(&m) else {
            bad.push(format!("m={m}: no valid n"));
            continue;
        };
        let x = HomotopyCp::new(4, m.clone(), n, None).expect("valid");
        if let Err(e) = acs_search_cp4(&x) {
            bad.push(e.to_string());
        }
    }
    r.checks.push(check("divisor_criterion_equals_direct", bad.is_empty(), json!({ "failures": bad })));

    let x = HomotopyCp::standard(4).expect("d = 4");
    let a: Vec<BigInt> = acs_search_cp4(&x).map(|s| s.iter().map(|s| s.a.clone()).collect()).unwrap_or_default();
    let expected: Vec<BigInt> = [-25, -5, -1, 1, 5, 25].map(BigInt::from).to_vec();
    r.checks.push(check(
        "standard_cp4_admissible_a",
        a == expected,
        json!({ "a": a.iter().map(num).collect::<Vec<_>>() }),
    ));
    let target = cp4_divisor_target(&x).ok();
    r.checks.push(check(
        "standard_cp4_target",
        target == Some(BigInt::from(25)) && divisor_target_cp4(&BigInt::from(0)).is_integer(),
        Value::Null,
    ));
    let scan = acs_scan_cp4(&x, &BigInt::from(30)).map(|s| s.len()).unwrap_or(0);
    r.checks.push(check("standard_cp4_scan", scan == 6, json!({ "count": scan })));
}

fn cp5(r: &mut Report) {
    let sym = symbolic_verify_cp5();
    let passed = sym.as_ref().map(|s| s.passed()).unwrap_or(false);
    r.checks.push(check("symbolic_k_vanishes", passed, Value::Null));

    let mut bad = Vec::new();
    for m in (-40..=40i64).step_by(2) {
        for n in -20..=20i64 {
            let x = HomotopyCp::from_ints(5, m, n, None).expect("m even");
            match cp5_structure(&x) {
                Ok((_, rep)) if rep.passed() => {}
                _ => bad.push(format!("m={m} n={n}")),
            }
        }
    }
    r.checks.push(check("explicit_structure_range", bad.is_empty(), json!({ "failures": bad })));

    let x = HomotopyCp::from_ints(5, 2, 0, None).expect("valid");
    let e = cp5_structure(&x).map(|(e, _)| e).ok();
    r.checks.push(check(
        "explicit_structure_m2",
        e == Some(KClass::from_ints(5, &[0, 6, 24, 0, 86, -62])),
        Value::Null,
    ));
}

fn pairs(sols: &[AcsSolution]) -> BTreeSet<(BigInt, BigInt)> {
    sols.iter().filter_map(|s| Some((s.a.clone(), s.c.clone()?))).collect()
}

fn cp6(r: &mut Report) {
    r.checks.push(golden_check("mod31_table", &mod31().to_csv(), golden::MOD31));

    let w = SearchWindow { a_max: 40, c_max: 40 };
    let x0 = HomotopyCp::standard(6).expect("d = 6");
    let std_pairs = acs_search_cp6(&x0, w, Cp6Criterion::Published).map(|s| pairs(&s)).unwrap_or_default();
    let has = |a: i64, c: i64| std_pairs.contains(&(BigInt::from(a), BigInt::from(c)));
    r.checks.push(check("standard_cp6_solutions", has(1, 1) && has(7, 35), json!({ "count": std_pairs.len() })));

    let sym = symbolic_cp6_numerators();
    let (denoms_ok, split) = match &sym {
        Ok(s) => (
            s.denominators == [2976, 23808, 2976, 23808, 3720, 23808].map(BigInt::from).to_vec(),
            s.rows_split(),
        ),
        Err(_) => (false, false),
    };
    r.checks.push(check("symbolic_denominators", denoms_ok, Value::Null));
    r.checks.push(check("symbolic_rows_split", split, Value::Null));

    let triples = cp6_triples(-48, 48, 31);
    let w = SearchWindow { a_max: 60, c_max: 60 };
    let mut bad = Vec::new();
    let mut published_mismatch = Vec::new();
    for t in &triples {
        if let Err(e) = acs_search_cp6(t, w, Cp6Criterion::Consistent) {
            bad.push(e.to_string());
        }
        let direct = acs_scan_cp6(t, w).map(|s| pairs(&s)).unwrap_or_default();
        let published: BTreeSet<_> = acs_criterion_cp6(t, w, Cp6Criterion::Published)
            .unwrap_or_default()
            .into_iter()
            .collect();
        if direct != published {
            published_mismatch.push(t.to_string());
        }
        if !cp6_exists(t, Cp6Criterion::Consistent).unwrap_or(false) {
            bad.push(format!("{t}: (1, 1) not realized"));
        }
    }
    r.checks.push(check(
        "consistent_criterion_equals_direct",
        bad.is_empty(),
        json!({ "triples": triples.len(), "window": 60, "failures": bad }),
    ));
    r.notes.push(Note {
        name: "published_criterion_equals_direct",
        matches: published_mismatch.is_empty(),
        detail: json!({ "triples": triples.len(), "mismatched": published_mismatch }),
    });
    if let Ok(s) = &sym {
        let quadratic = s.f.coeff(&Monomial::var_pow(Var::M, 2));
        r.notes.push(Note {
            name: "published_f_m2_coefficient",
            matches: quadratic == BigInt::from(4658160),
            detail: json!({ "computed": num(&quadratic), "published": 4658160 }),
        });
    }
    let x = HomotopyCp::from_ints(6, 16, 11, Some(23)).expect("valid");
    let direct = acs_scan_cp6(&x, SearchWindow { a_max: 99, c_max: 99 }).map(|s| s.len()).unwrap_or(0);
    r.notes.push(Note {
        name: "published_nonexistence_x_16_11_23",
        matches: direct == 0,
        detail: json!({ "direct_solutions": direct, "window": 99 }),
    });
}

pub fn cmd_verify(suite: &str, seed: u64) -> Outcome {
    if !SUITES.contains(&suite) {
        return Outcome::usage(format!("unknown suite '{suite}'; expected one of {}", SUITES.join(", ")));
    }
    let mut r = Report::default();
    let all = suite == "all";
    if all || suite == "ktheory" {
        ktheory(&mut r);
    }
    if all || suite == "chernvec" {
        chernvec(&mut r, seed);
    }
    if all || suite == "cp4" {
        cp4(&mut r);
    }
    if all || suite == "cp5" {
        cp5(&mut r);
    }
    if all || suite == "cp6" {
        cp6(&mut r);
    }
    let passed = r.checks.iter().all(|c| c.passed);
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let mut payload = json!({ "suite": suite, "passed": passed, "checks": checks });
    if !r.notes.is_empty() {
        payload["literature"] = r
            .notes
            .iter()
            .map(|n| json!({ "name": n.name, "matches": n.matches, "detail": n.detail }))
            .collect();
    }
    let status = if passed { Status::Ok } else { Status::Failed };
    Outcome::with_status(status, payload)
}
