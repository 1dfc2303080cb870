//! Delimiter-separated dataset of a sampled bisector family.

use serde::{Deserialize, Serialize};
use tribisect::FamilyMember;

pub const HEADER: [&str; 7] = ["case", "w", "t", "base_x", "base_y", "dir_x", "dir_y"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub case: char,
    pub w: f64,
    pub t: f64,
    pub base_x: f64,
    pub base_y: f64,
    pub dir_x: f64,
    pub dir_y: f64,
}

impl From<&FamilyMember> for FamilyRow {
    fn from(m: &FamilyMember) -> Self {
        Self {
            case: m.case.letter(),
            w: m.w,
            t: m.t,
            base_x: m.line.base.x,
            base_y: m.line.base.y,
            dir_x: m.line.dir.x,
            dir_y: m.line.dir.y,
        }
    }
}

/// Numbers use the shortest representation that parses back to the same
/// `f64`, so output is exact and deterministic.
pub fn to_csv(rows: &[FamilyRow]) -> String {
    let mut out = HEADER.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.case, r.w, r.t, r.base_x, r.base_y, r.dir_x, r.dir_y
        ));
    }
    out
}

pub fn from_csv(text: &str) -> Option<Vec<FamilyRow>> {
    let mut lines = text.lines();
    if lines.next()? != HEADER.join(",") {
        return None;
    }
    lines
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != HEADER.len() {
                return None;
            }
            let num = |i: usize| f[i].parse::<f64>().ok();
            Some(FamilyRow {
                case: f[0].chars().next()?,
                w: num(1)?,
                t: num(2)?,
                base_x: num(3)?,
                base_y: num(4)?,
                dir_x: num(5)?,
                dir_y: num(6)?,
            })
        })
        .collect()
}
