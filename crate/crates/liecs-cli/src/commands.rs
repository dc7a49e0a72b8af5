//! Command implementations. Every command returns its report plus the exit
//! code: 0 = all checks pass, 1 = a mathematical check failed, 2 = input
//! or usage error (raised as `Err`).

use std::path::Path;

use serde_json::{json, Value};

use liecs::catalog::{self, verify};
use liecs::cstruct::{self, bform_signature, check_matrix};
use liecs::lie::format_vector;
use liecs::scalar::Rat;
use liecs::subspace::Subspace;

use crate::classify;
use crate::files::{AcsFile, AlgebraFile, AssocFile};
use crate::report::Report;
use crate::{EXIT_MATH, EXIT_OK};

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn load_algebra(path: &Path) -> Result<liecs::lie::LieAlgebra, String> {
    AlgebraFile::parse(&read(path)?)
        .and_then(|f| f.to_algebra())
        .map_err(|e| format!("{}: {e}", path.display()))
}

pub fn load_matrix(path: &Path) -> Result<liecs::mat::Mat<Rat>, String> {
    AcsFile::parse(&read(path)?)
        .and_then(|f| f.to_matrix())
        .map_err(|e| format!("{}: {e}", path.display()))
}

pub fn verify_catalog(id: Option<&str>, grid: usize) -> Result<(Report, u8), String> {
    let entries = catalog::entries();
    let selected: Vec<_> = match id {
        Some(wanted) => {
            let filtered: Vec<_> = entries
                .into_iter()
                .filter(|e| e.id == wanted || e.algebra_id == wanted)
                .collect();
            if filtered.is_empty() {
                return Err(format!("unknown catalog id {wanted:?}"));
            }
            filtered
        }
        None => entries,
    };
    let mut lines = Vec::new();
    let mut entries_json = Vec::new();
    let mut all_passed = true;
    for entry in &selected {
        let report = verify::verify_entry(entry, grid);
        let passed = report.passed();
        all_passed &= passed;
        lines.push(format!(
            "{} [{}]: {} over {} parameter point(s)",
            report.id,
            report.anchor,
            if passed { "pass" } else { "FAIL" },
            report.points_checked,
        ));
        for check in report.checks.iter().filter(|c| !c.passed) {
            lines.push(format!("    {}: {}", check.name, check.detail));
        }
        entries_json.push(json!({
            "id": report.id,
            "anchor": report.anchor,
            "points": report.points_checked,
            "passed": passed,
            "checks": report.checks.iter().map(|c| json!({
                "name": c.name, "passed": c.passed, "detail": c.detail,
            })).collect::<Vec<_>>(),
        }));
    }
    lines.push(format!(
        "{} entr{} checked: {}",
        selected.len(),
        if selected.len() == 1 { "y" } else { "ies" },
        if all_passed { "all pass" } else { "FAILURES" }
    ));
    let report = Report { lines, json: json!({ "entries": entries_json, "passed": all_passed }) };
    Ok((report, if all_passed { EXIT_OK } else { EXIT_MATH }))
}

pub fn check(algebra_path: &Path, j_path: Option<&Path>) -> Result<(Report, u8), String> {
    let lie = load_algebra(algebra_path)?;
    let mut lines = Vec::new();
    let mut body = serde_json::Map::new();
    let mut code = EXIT_OK;

    lines.push(format!("dimension: {}", lie.dim()));
    body.insert("dim".into(), json!(lie.dim()));

    let violations = lie.jacobi_violations();
    let jacobi_ok = violations.is_empty();
    lines.push(format!("jacobi: {}", if jacobi_ok { "holds" } else { "FAILS" }));
    body.insert("jacobi".into(), json!(jacobi_ok));
    if !jacobi_ok {
        code = EXIT_MATH;
        for v in violations.iter().take(5) {
            lines.push(format!("    violation at {v}"));
        }
        body.insert(
            "jacobi_violations".into(),
            json!(violations
                .iter()
                .map(|v| json!({
                    "triple": [v.i + 1, v.j + 1, v.k + 1],
                    "residual": format_vector(&v.residual),
                }))
                .collect::<Vec<_>>()),
        );
    }

    let dims = |s: &[Subspace<Rat>]| -> Vec<usize> { s.iter().map(Subspace::dim).collect() };
    let lcs = dims(&lie.lower_central_series());
    let der = dims(&lie.derived_series());
    lines.push(format!("lower central series dims: {lcs:?}"));
    lines.push(format!("derived series dims: {der:?}"));
    lines.push(format!("nilpotent: {}", lie.is_nilpotent()));
    let center = lie.center();
    lines.push(format!("center: dimension {}", center.dim()));
    lines.push(format!("unimodular: {}", lie.is_unimodular()));
    body.insert("lower_central_dims".into(), json!(lcs));
    body.insert("derived_dims".into(), json!(der));
    body.insert("nilpotent".into(), json!(lie.is_nilpotent()));
    body.insert("center_dim".into(), json!(center.dim()));
    body.insert("unimodular".into(), json!(lie.is_unimodular()));

    if let Some(path) = j_path {
        let m = load_matrix(path)?;
        let report = check_matrix(&lie, &m).map_err(|e| e.to_string())?;
        lines.push(format!("J^2 = -I: {}", report.is_acs));
        lines.push(format!("integrable: {}", report.integrable));
        lines.push(format!("abelian: {}", report.abelian));
        lines.push(format!("bi-invariant: {}", report.bi_invariant));
        for (label, failures) in [
            ("nijenhuis", &report.nijenhuis_failures),
            ("abelian", &report.abelian_failures),
            ("bi-invariant", &report.bi_invariant_failures),
        ] {
            if let Some((i, j)) = failures.first() {
                lines.push(format!(
                    "    first failing {label} pair: (e{}, e{}) of {} pair(s)",
                    i + 1,
                    j + 1,
                    failures.len()
                ));
            }
        }
        body.insert("is_acs".into(), json!(report.is_acs));
        body.insert("integrable".into(), json!(report.integrable));
        body.insert("abelian".into(), json!(report.abelian));
        body.insert("bi_invariant".into(), json!(report.bi_invariant));
        if !report.is_acs {
            code = EXIT_MATH;
        } else {
            let acs = cstruct::AlmostComplexStructure::new(m).expect("checked above");
            let (sat, proper) = cstruct::j_commutator(&lie, &acs);
            lines.push(format!("dim g' + Jg': {} (proper: {proper})", sat.dim()));
            body.insert("j_commutator_dim".into(), json!(sat.dim()));
            body.insert("proper".into(), json!(proper));
            match bform_signature(&lie, &acs) {
                Ok(sig) => {
                    lines.push(format!("B-signature: ({}, {})", sig.0, sig.1));
                    body.insert("b_signature".into(), json!([sig.0, sig.1]));
                }
                Err(e) => {
                    lines.push(format!("B-signature: undefined ({e})"));
                    body.insert("b_signature".into(), Value::Null);
                }
            }
        }
    }

    Ok((Report { lines, json: Value::Object(body) }, code))
}

pub fn classify_cmd(algebra_path: &Path, j_path: &Path) -> Result<(Report, u8), String> {
    let lie = load_algebra(algebra_path)?;
    if !lie.jacobi_violations().is_empty() {
        return Ok((
            Report {
                lines: vec!["jacobi: FAILS (not a Lie algebra)".into()],
                json: json!({ "jacobi": false }),
            },
            EXIT_MATH,
        ));
    }
    let m = load_matrix(j_path)?;
    let report = check_matrix(&lie, &m).map_err(|e| e.to_string())?;
    if !report.is_acs || !report.abelian {
        let line = format!(
            "structure is not an abelian complex structure (J^2=-I: {}, abelian: {})",
            report.is_acs, report.abelian
        );
        return Ok((
            Report { lines: vec![line.clone()], json: json!({ "abelian": false, "detail": line }) },
            EXIT_MATH,
        ));
    }
    let acs = cstruct::AlmostComplexStructure::new(m).expect("checked above");
    let outcome = classify::classify(&lie, &acs);
    Ok((classify::render(&outcome), EXIT_OK))
}

pub fn derivations(algebra_path: &Path, with_j: Option<&Path>) -> Result<(Report, u8), String> {
    let lie = load_algebra(algebra_path)?;
    let (label, basis) = match with_j {
        None => ("derivations", lie.derivation_space()),
        Some(path) => {
            let m = load_matrix(path)?;
            let acs = cstruct::AlmostComplexStructure::new(m).map_err(|e| e.to_string())?;
            ("derivation pairs", cstruct::pair_derivation_space(&lie, &acs))
        }
    };
    let mut lines = vec![format!("{label}: dimension {}", basis.len())];
    let mut mats = Vec::new();
    for (k, d) in basis.iter().enumerate() {
        lines.push(format!("basis element {}:", k + 1));
        let mut rows = Vec::new();
        for r in 0..d.rows() {
            let row: Vec<String> =
                (0..d.cols()).map(|c| liecs::scalar::format_rational(&d[(r, c)])).collect();
            lines.push(format!("    [{}]", row.join(", ")));
            rows.push(row);
        }
        mats.push(rows);
    }
    let json = json!({ "kind": label, "dimension": basis.len(), "basis": mats });
    Ok((Report { lines, json }, EXIT_OK))
}

pub fn series(algebra_path: &Path) -> Result<(Report, u8), String> {
    let lie = load_algebra(algebra_path)?;
    let lcs: Vec<usize> = lie.lower_central_series().iter().map(Subspace::dim).collect();
    let der: Vec<usize> = lie.derived_series().iter().map(Subspace::dim).collect();
    let lines = vec![
        format!("lower central series dims: {lcs:?}"),
        format!("derived series dims: {der:?}"),
        format!("nilpotent: {} solvable: {}", lie.is_nilpotent(), lie.is_solvable()),
    ];
    let json = json!({
        "lower_central_dims": lcs,
        "derived_dims": der,
        "nilpotent": lie.is_nilpotent(),
        "solvable": lie.is_solvable(),
    });
    Ok((Report { lines, json }, EXIT_OK))
}

pub fn affalg_cmd(path: &Path) -> Result<(Report, u8), String> {
    let algebra = AssocFile::parse(&read(path)?)
        .and_then(|f| f.to_algebra())
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let mut lines = Vec::new();
    let violations = algebra.assoc_violations();
    let assoc_ok = violations.is_empty();
    lines.push(format!("associative: {assoc_ok}"));
    if !assoc_ok {
        for v in violations.iter().take(5) {
            lines.push(format!(
                "    violation at (e{}, e{}, e{}) residual {}",
                v.i + 1,
                v.j + 1,
                v.k + 1,
                format_vector(&v.residual)
            ));
        }
        let json = json!({ "associative": false, "violations": violations.len() });
        return Ok((Report { lines, json }, EXIT_MATH));
    }
    let (square, has_unit) = algebra.square_subspace();
    let inv = liecs::affalg::invariants(&algebra);
    lines.push(format!("dim A^2: {} (A^2 = A: {})", square.dim(), square.is_full()));
    lines.push(format!("has unit: {has_unit}"));
    lines.push(format!("nilradical dim: {}", inv.nilradical_dim));
    let (lie, acs) = algebra.aff_of();
    let jacobi_ok = lie.jacobi_violations().is_empty();
    let report = check_matrix(&lie, acs.matrix()).map_err(|e| e.to_string())?;
    lines.push(format!(
        "doubling: dimension {}, jacobi {}, standard structure abelian: {}",
        lie.dim(),
        if jacobi_ok { "holds" } else { "FAILS" },
        report.abelian
    ));
    let (sat, proper) = cstruct::j_commutator(&lie, &acs);
    lines.push(format!("doubling dim g' + Jg': {} (proper: {proper})", sat.dim()));
    let json = json!({
        "associative": true,
        "square_dim": square.dim(),
        "square_is_everything": square.is_full(),
        "has_unit": has_unit,
        "nilradical_dim": inv.nilradical_dim,
        "doubling_dim": lie.dim(),
        "doubling_jacobi": jacobi_ok,
        "doubling_abelian": report.abelian,
        "doubling_proper": proper,
    });
    let ok = jacobi_ok && report.abelian;
    Ok((Report { lines, json }, if ok { EXIT_OK } else { EXIT_MATH }))
}
