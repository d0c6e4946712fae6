use hcpn_core::chernvec::{realizable, ChernError, ChernVector};
use hcpn_core::cohomology::CohClass;
use hcpn_core::homotopy::{
    acs_scan_cp6, acs_search_cp4, acs_search_cp6, cp4_divisor_target, cp5_structure, cp6_exists, mod31_table,
    valid_cp4_n, AcsSolution, Cp6Criterion, HomotopyCp, HomotopyError, SearchWindow,
};
use hcpn_core::ktheory::{KClass, KOClass};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::output::{num, nums, rational, Outcome, Status, Table};

pub const MAX_REALIZABLE_DIM: usize = 8;

pub fn cmd_realizable(dim: usize, chern: &[BigInt]) -> Outcome {
    if dim == 0 || dim > MAX_REALIZABLE_DIM {
        return Outcome::usage(format!("--dim must be in 1..={MAX_REALIZABLE_DIM}, got {dim}"));
    }
    if chern.len() != dim {
        return Outcome::usage(format!("expected {dim} Chern numbers c_1..c_{dim}, got {}", chern.len()));
    }
    let v = ChernVector::new(chern.to_vec());
    match realizable(&v) {
        Ok(dec) => Outcome::ok(json!({
            "dim": dim,
            "chern": nums(chern),
            "realizable": true,
            "decomposition": nums(&dec.a),
        })),
        Err(ChernError::NotRealizable { solution }) => Outcome::ok(json!({
            "dim": dim,
            "chern": nums(chern),
            "realizable": false,
            "decomposition": Value::Null,
            "solution": solution.iter().map(rational).collect::<Vec<_>>(),
        })),
        Err(e) => Outcome::failed(e.to_string()),
    }
}

/// Maps a homotopy-module error to a CLI outcome.
pub fn homotopy_outcome(e: HomotopyError) -> Outcome {
    match e {
        HomotopyError::ConstraintViolated { equation, residual } => Outcome::with_status(
            Status::Violation,
            json!({ "kind": "constraint", "equation": equation, "residual": num(&residual) }),
        ),
        HomotopyError::MissingParameter(_)
        | HomotopyError::UnexpectedParameter(_)
        | HomotopyError::UnsupportedDimension(_) => Outcome::usage(e.to_string()),
        other => Outcome::failed(other.to_string()),
    }
}

fn solution_json(s: &AcsSolution) -> Value {
    let mut v = json!({ "a": num(&s.a) });
    if let Some(c) = &s.c {
        v["c"] = num(c);
    }
    v["chern"] = nums(s.full_chern.entries());
    v["decomposition"] = nums(&s.decomposition.a);
    v
}

fn header(x: &HomotopyCp) -> Value {
    let mut v = json!({ "dim": x.dim(), "m": num(x.m()), "n": num(x.n()) });
    if let Some(q) = x.q() {
        v["q"] = num(q);
    }
    v
}

pub struct AcsRequest {
    pub dim: usize,
    pub m: BigInt,
    pub n: BigInt,
    pub q: Option<BigInt>,
    pub window: SearchWindow,
    pub criterion: Cp6Criterion,
}

pub fn cmd_acs(req: &AcsRequest) -> Outcome {
    let x = match HomotopyCp::new(req.dim, req.m.clone(), req.n.clone(), req.q.clone()) {
        Ok(x) => x,
        Err(e) => return homotopy_outcome(e),
    };
    let result = match req.dim {
        4 => acs_cp4(&x),
        5 => acs_cp5(&x),
        _ => acs_cp6(&x, req.window, req.criterion),
    };
    result.unwrap_or_else(homotopy_outcome)
}

fn acs_cp4(x: &HomotopyCp) -> Result<Outcome, HomotopyError> {
    let target = cp4_divisor_target(x)?;
    let sols = acs_search_cp4(x)?;
    let mut v = header(x);
    v["pontrjagin"] = nums(&x.pontrjagin()?.integers()?);
    v["divisor_target"] = num(&target);
    v["a"] = Value::Array(sols.iter().map(|s| num(&s.a)).collect());
    v["solutions"] = Value::Array(sols.iter().map(solution_json).collect());
    Ok(Outcome::ok(v))
}

fn acs_cp5(x: &HomotopyCp) -> Result<Outcome, HomotopyError> {
    let (e, report) = cp5_structure(x)?;
    let mut v = header(x);
    v["e_coefficients"] = nums(&e.coeffs()[1..]);
    v["real_reduction"] = nums(report.real_reduction.coeffs());
    v["tangent"] = nums(report.tangent.coeffs());
    v["c5"] = num(&report.c5);
    v["checks"] = json!({
        "real_reduction_is_tangent": report.reduction_matches(),
        "top_chern_is_euler": report.euler_matches(),
    });
    v["passed"] = Value::Bool(report.passed());
    let status = if report.passed() { Status::Ok } else { Status::Failed };
    Ok(Outcome::with_status(status, v))
}

fn acs_cp6(x: &HomotopyCp, w: SearchWindow, criterion: Cp6Criterion) -> Result<Outcome, HomotopyError> {
    let mut v = header(x);
    v["criterion"] = json!(criterion.name());
    v["window"] = json!({ "a_max": w.a_max, "c_max": w.c_max });
    v["pontrjagin"] = nums(&x.pontrjagin()?.integers()?);
    let exists = cp6_exists(x, criterion)?;
    v["exists"] = Value::Bool(exists);
    match acs_search_cp6(x, w, criterion) {
        Ok(sols) => {
            v["solutions"] = Value::Array(sols.iter().map(solution_json).collect());
            Ok(Outcome::ok(v))
        }
        Err(HomotopyError::CrossCheck(msg)) => {
            let direct = acs_scan_cp6(x, w)?;
            v["solutions"] = Value::Array(Vec::new());
            v["direct_solutions"] = Value::Array(direct.iter().map(solution_json).collect());
            v["mismatch"] = json!(msg);
            Ok(Outcome::with_status(Status::Failed, v))
        }
        Err(e) => Err(e),
    }
}

pub const TABLES: [&str; 3] = ["mod31", "pontrjagin-omega", "divisor-targets"];

pub fn mod31() -> Table {
    Table {
        name: "mod31".into(),
        columns: vec!["m", "n"],
        rows: mod31_table().into_iter().map(|(m, n)| vec![json!(m), json!(n)]).collect(),
    }
}

/// `p_i(omega^k)` as coefficients of `u^{2i}`, `1 <= k, i <= d/2`.
pub fn pontrjagin_omega(dim: usize) -> Result<Table, String> {
    if dim != 4 && dim != 6 {
        return Err(format!("pontrjagin-omega needs --dim 4 or 6, got {dim}"));
    }
    let half = dim / 2;
    let mut rows = Vec::new();
    for k in 1..=half {
        let p = KOClass::omega_pow(dim, k)
            .and_then(|w| w.pontrjagin_total())
            .map_err(|e| e.to_string())?;
        for i in 1..=half {
            rows.push(vec![json!(k), json!(i), rational(p.coeff(2 * i))]);
        }
    }
    Ok(Table { name: format!("pontrjagin-omega-d{dim}"), columns: vec!["k", "i", "p"], rows })
}

/// `(m, n, D(m))` for every valid `CP^4` pair with `|m| <= m_max`.
pub fn divisor_targets(dim: usize, m_max: i64) -> Result<Table, String> {
    if dim != 4 {
        return Err(format!("divisor-targets is defined for --dim 4, got {dim}"));
    }
    if m_max < 0 {
        return Err("--m-max must be non-negative".into());
    }
    let mut rows = Vec::new();
    for m in -m_max..=m_max {
        let m = BigInt::from(m);
        let Some(n) = valid_cp4_n(&m) else { continue };
        let x = HomotopyCp::new(4, m.clone(), n.clone(), None).map_err(|e| e.to_string())?;
        let d = cp4_divisor_target(&x).map_err(|e| e.to_string())?;
        rows.push(vec![num(&m), num(&n), num(&d)]);
    }
    Ok(Table { name: "divisor-targets-d4".into(), columns: vec!["m", "n", "target"], rows })
}

/// `c_*(L^i)` on `CP^5`, `i = 1..5`.
pub fn chern_series() -> Table {
    let rows = (1..=5)
        .map(|i| {
            let c: CohClass = KClass::l_pow(5, i).total_chern();
            let mut row = vec![json!(i)];
            row.extend((0..=5).map(|k| rational(c.coeff(k))));
            row
        })
        .collect();
    Table {
        name: "chern-series-d5".into(),
        columns: vec!["i", "c0", "c1", "c2", "c3", "c4", "c5"],
        rows,
    }
}

pub fn cmd_table(name: &str, dim: Option<usize>, m_max: i64) -> Outcome {
    let table = match name {
        "mod31" => Ok(mod31()),
        "pontrjagin-omega" => pontrjagin_omega(dim.unwrap_or(6)),
        "divisor-targets" => divisor_targets(dim.unwrap_or(4), m_max),
        other => Err(format!("unknown table '{other}'; expected one of {}", TABLES.join(", "))),
    };
    match table {
        Ok(t) => t.into_outcome(),
        Err(msg) => Outcome::usage(msg),
    }
}
