//! The four subcommands. Each returns the text destined for stdout and
//! whether every line passed the area check; writing `--out` files happens
//! here, after all checks.

use std::fmt::Write;
use std::path::PathBuf;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use tribisect::{
    bisecting_line, brute_force_bisector, check_bisection, sample_family, DirectionInput, EdgeCase,
    GeomError, ParamLine, Triangle,
};

use crate::dataset::{self, FamilyRow};
use crate::error::CliError;
use crate::io::write_atomic;
use crate::report::{self, BisectReport, QueryReport, TriangleReport};
use crate::svg;

/// Solver and oracle offsets must agree to this fraction of the diameter.
pub const AGREEMENT_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Query {
    pub label: String,
    pub input: DirectionInput,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub triangle: Triangle,
    pub queries: Vec<Query>,
    pub samples: usize,
    pub tol: f64,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub dp: Option<u32>,
    pub precision: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub passed: bool,
}

impl JobSpec {
    pub fn new(triangle: Triangle) -> Self {
        Self {
            triangle,
            queries: Vec::new(),
            samples: 101,
            tol: 1e-9,
            out: None,
            format: None,
            dp: None,
            precision: 6,
        }
    }

    fn check_tolerance(&self) -> Result<(), CliError> {
        if self.tol > 0.0 && self.tol.is_finite() {
            Ok(())
        } else {
            Err(CliError::geometry(
                "--tol",
                GeomError::InvalidTolerance(self.tol),
            ))
        }
    }

    fn emit(&self, contents: String) -> Result<String, CliError> {
        match &self.out {
            Some(path) => {
                write_atomic(path, &contents)?;
                Ok(format!("wrote {}\n", path.display()))
            }
            None => Ok(contents),
        }
    }
}

fn solve(tri: &Triangle, q: &Query) -> Result<tribisect::BisectorResult, CliError> {
    bisecting_line(tri, q.input.to_direction())
        .map_err(|e| CliError::geometry(format!("query {}", q.label), e))
}

fn audit_err(e: GeomError) -> CliError {
    CliError::geometry("area check", e)
}

pub fn build_bisect_report(spec: &JobSpec) -> Result<BisectReport, CliError> {
    spec.check_tolerance()?;
    if spec.queries.is_empty() {
        return Err(CliError::parse(
            "query list",
            "",
            "bisect needs at least one --dir or --slope",
        ));
    }
    let tri = &spec.triangle;
    let queries = spec
        .queries
        .iter()
        .map(|q| {
            let result = solve(tri, q)?;
            let audit = check_bisection(tri, &result.line, spec.tol).map_err(audit_err)?;
            Ok(QueryReport::new(q.label.clone(), &result, audit, spec.dp))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let passed = queries.iter().all(|q| q.audit.passed);
    Ok(BisectReport {
        triangle: TriangleReport::new(tri),
        tolerance: spec.tol,
        queries,
        passed,
    })
}

fn bisect_csv(report: &BisectReport) -> String {
    let mut out = String::from(
        "input,case,w,t,base_x,base_y,dir_x,dir_y,y_intercept,degenerate_median,relative_gap,passed\n",
    );
    for q in &report.queries {
        let _ = writeln!(
            out,
            "\"{}\",{},{},{},{},{},{},{},{},{},{},{}",
            q.input.replace('"', "\"\""),
            q.case,
            q.w,
            q.t,
            q.base[0],
            q.base[1],
            q.dir[0],
            q.dir[1],
            q.y_intercept.map(|y| y.to_string()).unwrap_or_default(),
            q.degenerate_median,
            q.audit.relative_gap,
            q.audit.passed
        );
    }
    out
}

pub fn cmd_bisect(spec: &JobSpec) -> Result<Output, CliError> {
    let report = build_bisect_report(spec)?;
    let text = match spec.format.unwrap_or(Format::Text) {
        Format::Text => report::render_text(&report, spec.precision, spec.dp),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Csv => bisect_csv(&report),
    };
    Ok(Output {
        stdout: spec.emit(text)?,
        passed: report.passed,
    })
}

pub fn family_rows(spec: &JobSpec) -> Result<Vec<FamilyRow>, CliError> {
    spec.check_tolerance()?;
    let tri = &spec.triangle;
    let members = sample_family(tri, spec.samples)
        .map_err(|e| CliError::geometry(format!("family with {} samples", spec.samples), e))?;
    let mut failed = 0;
    for m in &members {
        if !check_bisection(tri, &m.line, spec.tol)
            .map_err(audit_err)?
            .passed
        {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(CliError::OracleFailed(failed));
    }
    Ok(members.iter().map(FamilyRow::from).collect())
}

pub fn cmd_family(spec: &JobSpec) -> Result<Output, CliError> {
    let rows = family_rows(spec)?;
    let text = match spec.format.unwrap_or(Format::Csv) {
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        Format::Csv | Format::Text => dataset::to_csv(&rows),
    };
    Ok(Output {
        stdout: spec.emit(text)?,
        passed: true,
    })
}

pub fn cmd_render(spec: &JobSpec) -> Result<Output, CliError> {
    spec.check_tolerance()?;
    let tri = &spec.triangle;
    let lines = spec
        .queries
        .iter()
        .map(|q| solve(tri, q).map(|r| r.line))
        .collect::<Result<Vec<ParamLine>, _>>()?;
    let edge_bisects = EdgeCase::ALL.map(|c| tri.edge_bisect(c));
    let mut failed = 0;
    for line in lines.iter().chain(edge_bisects.iter()) {
        if !check_bisection(tri, line, spec.tol)
            .map_err(audit_err)?
            .passed
        {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(CliError::OracleFailed(failed));
    }
    Ok(Output {
        stdout: spec.emit(svg::render(tri, &lines))?,
        passed: true,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyLine {
    pub label: String,
    pub solver_gap: f64,
    /// Only for explicit queries; the family sweep is not searched.
    pub oracle_gap: Option<f64>,
    pub offset_diff: Option<f64>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub tolerance: f64,
    pub lines: Vec<VerifyLine>,
    pub passed: bool,
}

pub fn build_verify_report(spec: &JobSpec) -> Result<VerifyReport, CliError> {
    spec.check_tolerance()?;
    let tri = &spec.triangle;
    let diameter = tri.diameter();
    let mut lines = Vec::new();
    for q in &spec.queries {
        let u = q.input.to_direction();
        let solver = solve(tri, q)?.line;
        let oracle = brute_force_bisector(tri, u)
            .map_err(|e| CliError::geometry(format!("query {}", q.label), e))?;
        let solver_gap = check_bisection(tri, &solver, spec.tol).map_err(audit_err)?;
        let oracle_gap = check_bisection(tri, &oracle, spec.tol).map_err(audit_err)?;
        let offset_diff = (solver.offset_along(u) - oracle.offset_along(u)).abs();
        lines.push(VerifyLine {
            label: format!("query {}", q.label),
            solver_gap: solver_gap.relative_gap,
            oracle_gap: Some(oracle_gap.relative_gap),
            offset_diff: Some(offset_diff),
            passed: solver_gap.passed && offset_diff <= AGREEMENT_TOL * diameter,
        });
    }
    let members = sample_family(tri, spec.samples)
        .map_err(|e| CliError::geometry(format!("family with {} samples", spec.samples), e))?;
    for m in &members {
        let rec = check_bisection(tri, &m.line, spec.tol).map_err(audit_err)?;
        lines.push(VerifyLine {
            label: format!("family {} w={:.6}", m.case, m.w),
            solver_gap: rec.relative_gap,
            oracle_gap: None,
            offset_diff: None,
            passed: rec.passed,
        });
    }
    let passed = lines.iter().all(|l| l.passed);
    Ok(VerifyReport {
        tolerance: spec.tol,
        lines,
        passed,
    })
}

pub fn cmd_verify(spec: &JobSpec) -> Result<Output, CliError> {
    let report = build_verify_report(spec)?;
    let text = match spec.format.unwrap_or(Format::Text) {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Text | Format::Csv => {
            let mut out = String::new();
            for l in &report.lines {
                let _ = write!(out, "{}: gap {:.3e}", l.label, l.solver_gap);
                if let (Some(og), Some(od)) = (l.oracle_gap, l.offset_diff) {
                    let _ = write!(out, ", oracle gap {og:.3e}, offset diff {od:.3e}");
                }
                let _ = writeln!(out, " {}", if l.passed { "PASS" } else { "FAIL" });
            }
            let ok = report.lines.iter().filter(|l| l.passed).count();
            let _ = writeln!(
                out,
                "{ok}/{} lines passed at tolerance {:e}",
                report.lines.len(),
                report.tolerance
            );
            out
        }
    };
    Ok(Output {
        stdout: spec.emit(text)?,
        passed: report.passed,
    })
}
