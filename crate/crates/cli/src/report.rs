//! Bisect reports: one structured object per run, rendered as JSON or as
//! human-readable text.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use tribisect::{AuditRecord, BisectorResult, SolveOutcome, Triangle, Vec2, M};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleReport {
    #[serde(rename = "A")]
    pub a: [f64; 2],
    #[serde(rename = "B")]
    pub b: [f64; 2],
    #[serde(rename = "C")]
    pub c: [f64; 2],
    pub area: f64,
}

impl TriangleReport {
    pub fn new(tri: &Triangle) -> Self {
        let [a, b, c] = tri.vertices().map(pair);
        Self {
            a,
            b,
            c,
            area: tri.area(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutcomeReport {
    pub case: char,
    pub defined: bool,
    pub x: Option<f64>,
    pub w: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelectedReport {
    pub case: char,
    pub x: f64,
    pub w: f64,
    pub t: f64,
    pub base: [f64; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub area_left: f64,
    pub area_right: f64,
    pub total: f64,
    pub relative_gap: f64,
    pub passed: bool,
}

impl From<AuditRecord> for AuditReport {
    fn from(r: AuditRecord) -> Self {
        Self {
            area_left: r.area_left,
            area_right: r.area_right,
            total: r.total,
            relative_gap: r.relative_gap,
            passed: r.passed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryReport {
    pub input: String,
    pub outcomes: Vec<OutcomeReport>,
    pub selected: Vec<SelectedReport>,
    pub case: char,
    pub w: f64,
    pub t: f64,
    pub m: f64,
    pub base: [f64; 2],
    pub dir: [f64; 2],
    pub y_intercept: Option<f64>,
    pub degenerate_median: bool,
    pub audit: AuditReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BisectReport {
    pub triangle: TriangleReport,
    pub tolerance: f64,
    pub queries: Vec<QueryReport>,
    pub passed: bool,
}

fn pair(v: Vec2) -> [f64; 2] {
    [v.x, v.y]
}

pub fn round_dp(x: f64, dp: u32) -> f64 {
    let scale = 10f64.powi(dp as i32);
    let r = (x * scale).round() / scale;
    // avoid "-0" in two-decimal output
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl QueryReport {
    /// `dp` rounds the `(x, w)` outcome pairs only.
    pub fn new(
        input: String,
        result: &BisectorResult,
        audit: AuditRecord,
        dp: Option<u32>,
    ) -> Self {
        let round = |v: f64| dp.map_or(v, |d| round_dp(v, d));
        let outcomes = result
            .outcomes
            .iter()
            .map(|o| match o {
                SolveOutcome::Defined(s) => OutcomeReport {
                    case: s.case.letter(),
                    defined: true,
                    x: Some(round(s.x)),
                    w: Some(round(s.w)),
                },
                SolveOutcome::Undefined(case) => OutcomeReport {
                    case: case.letter(),
                    defined: false,
                    x: None,
                    w: None,
                },
            })
            .collect();
        let selected = result
            .selected
            .iter()
            .map(|s| SelectedReport {
                case: s.solution.case.letter(),
                x: s.solution.x,
                w: s.solution.w,
                t: s.t,
                base: pair(s.base),
            })
            .collect();
        Self {
            input,
            outcomes,
            selected,
            case: result.case().letter(),
            w: result.w(),
            t: result.t,
            m: M,
            base: pair(result.line.base),
            dir: pair(result.line.dir),
            y_intercept: result.line.y_intercept(),
            degenerate_median: result.degenerate_median,
            audit: audit.into(),
        }
    }
}

/// `%g`-style formatting with `sig` significant digits.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    let sig = sig.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if exp < -4 || exp >= sig as i32 {
        let s = format!("{:.*e}", sig - 1, x);
        match s.split_once('e') {
            Some((mantissa, e)) => format!("{}e{}", trim_zeros(mantissa), e),
            None => s,
        }
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn render_text(report: &BisectReport, precision: usize, dp: Option<u32>) -> String {
    let g = |x: f64| fmt_sig(x, precision);
    let pt = |p: [f64; 2]| format!("({}, {})", g(p[0]), g(p[1]));
    let paired = |x: f64| match dp {
        Some(d) => format!("{:.*}", d as usize, x),
        None => g(x),
    };

    let mut out = String::new();
    let tri = &report.triangle;
    let _ = writeln!(
        out,
        "triangle A={} B={} C={}  area={}",
        pt(tri.a),
        pt(tri.b),
        pt(tri.c),
        g(tri.area)
    );
    for (i, q) in report.queries.iter().enumerate() {
        let _ = writeln!(out, "\nquery {}: {}", i + 1, q.input);
        for o in &q.outcomes {
            match (o.x, o.w) {
                (Some(x), Some(w)) => {
                    let _ = writeln!(
                        out,
                        "  case {}: (x, w) = ({}, {})",
                        o.case,
                        paired(x),
                        paired(w)
                    );
                }
                _ => {
                    let _ = writeln!(out, "  case {}: undefined", o.case);
                }
            }
        }
        let cases: Vec<String> = q.selected.iter().map(|s| s.case.to_string()).collect();
        let _ = writeln!(out, "  selected: {}", cases.join(" and "));
        let orientation = if q.selected[0].x < 0.0 {
            " (orientation reversed)"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  w = {}  t = {}  m = {}{}",
            g(q.w),
            g(q.t),
            g(q.m),
            orientation
        );
        let _ = writeln!(out, "  line: base {} dir {}", pt(q.base), pt(q.dir));
        match q.y_intercept {
            Some(y) => {
                let _ = writeln!(out, "  y-intercept: {}", g(y));
            }
            None => {
                let _ = writeln!(out, "  y-intercept: none (vertical)");
            }
        }
        let _ = writeln!(
            out,
            "  degenerate median: {}",
            if q.degenerate_median { "yes" } else { "no" }
        );
        let a = &q.audit;
        let _ = writeln!(
            out,
            "  oracle: left {} right {} gap {:.3e} {}",
            g(a.area_left),
            g(a.area_right),
            a.relative_gap,
            if a.passed { "PASS" } else { "FAIL" }
        );
    }
    out
}
