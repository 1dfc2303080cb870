//! Area-bisecting line of a triangle with a prescribed direction.
//!
//! The directions reachable by tilting each edge-bisect form three ranges,
//! each bounded by two medians:
//!
//! ```text
//! u_a = (a - c) + w (c - b)
//! u_b = (b - a) + w (a - c)
//! u_c = (c - b) + w (b - a),      w in [0, 1]
//! ```
//!
//! For a query direction `u`, each system `u x = z + w y` is solved for
//! `(x, w)`. The case whose `w` lands in `[0, 1]` names the edge-bisect to
//! pivot on; the pivot sits at fraction `t(w)` along it and the answer is the
//! line through the pivot with direction `u`.

use crate::error::{GeomError, Result};
use crate::geom::{ParamLine, Vec2};
use crate::triangle::{EdgeCase, Edges, Triangle, M};

/// Slack for accepting `w` in `[0, 1]`; accepted values are clamped.
pub const W_EPS: f64 = 1e-9;

/// Relative threshold for `u` being parallel to a system's `w` coefficient.
pub const PARALLEL_EPS: f64 = 1e-12;

/// `(x, w)` solving `u x = z + w y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PValue {
    pub x: f64,
    pub w: f64,
}

/// Solves `u x = z + w y` for `(x, w)`:
///
/// ```text
/// x = (z . y⊥) / (u . y⊥),   w = (z . u⊥) / (u . y⊥)
/// ```
///
/// Returns `None` when `u` is parallel to `y`.
pub fn solve_p(u: Vec2, y: Vec2, z: Vec2) -> Option<PValue> {
    let det = u.dot(y.perp());
    if det.abs() <= PARALLEL_EPS * u.norm() * y.norm() {
        return None;
    }
    Some(PValue {
        x: z.dot(y.perp()) / det,
        w: z.dot(u.perp()) / det,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaseSolution {
    pub case: EdgeCase,
    /// Scale of `u` against the range's canonical direction; its sign is the
    /// relative orientation and does not affect the line.
    pub x: f64,
    pub w: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SolveOutcome {
    Defined(CaseSolution),
    /// The query is parallel to this case's `w` coefficient, i.e. a median.
    Undefined(EdgeCase),
}

impl SolveOutcome {
    pub fn case(&self) -> EdgeCase {
        match self {
            SolveOutcome::Defined(s) => s.case,
            SolveOutcome::Undefined(case) => *case,
        }
    }

    pub fn solution(&self) -> Option<&CaseSolution> {
        match self {
            SolveOutcome::Defined(s) => Some(s),
            SolveOutcome::Undefined(_) => None,
        }
    }

    pub fn w(&self) -> Option<f64> {
        self.solution().map(|s| s.w)
    }
}

/// `(y, z)` of the case system `u x = z + w y`.
fn system(edges: &Edges, case: EdgeCase) -> (Vec2, Vec2) {
    let Edges { a, b, c } = *edges;
    match case {
        EdgeCase::A => (c - b, a - c),
        EdgeCase::B => (a - c, b - a),
        EdgeCase::C => (b - a, c - b),
    }
}

/// Direction `z + w y` at tilt `w` within the given case's range.
pub fn tilt_direction(tri: &Triangle, case: EdgeCase, w: f64) -> Vec2 {
    let (y, z) = system(&tri.edges(), case);
    z + y * w
}

fn check_direction(u: Vec2) -> Result<()> {
    if !u.is_finite() {
        return Err(GeomError::NonFinite("direction"));
    }
    if u.is_negligible(0.0) {
        return Err(GeomError::DegenerateDirection { x: u.x, y: u.y });
    }
    Ok(())
}

/// Solves the three case systems, in order A, B, C.
pub fn case_systems(tri: &Triangle, u: Vec2) -> Result<[SolveOutcome; 3]> {
    check_direction(u)?;
    let edges = tri.edges();
    Ok(EdgeCase::ALL.map(|case| {
        let (y, z) = system(&edges, case);
        match solve_p(u, y, z) {
            Some(PValue { x, w }) => SolveOutcome::Defined(CaseSolution { case, x, w }),
            None => SolveOutcome::Undefined(case),
        }
    }))
}

/// Cases whose `w` lies in `[0, 1]`, with `w` clamped into range.
#[derive(Clone, Debug, PartialEq)]
pub struct Selection {
    /// One entry generically, two for a median direction; ordered A, B, C.
    pub selected: Vec<CaseSolution>,
    pub degenerate_median: bool,
}

pub fn select_case(outcomes: &[SolveOutcome; 3]) -> Result<Selection> {
    let undefined = outcomes
        .iter()
        .filter(|o| matches!(o, SolveOutcome::Undefined(_)))
        .count();

    let selected: Vec<CaseSolution> = if undefined == 1 {
        // u is a median: the two neighbouring ranges meet it at w = 0 and w = 1
        outcomes
            .iter()
            .filter_map(SolveOutcome::solution)
            .map(|s| CaseSolution {
                w: if s.w < 0.5 { 0.0 } else { 1.0 },
                ..*s
            })
            .collect()
    } else {
        outcomes
            .iter()
            .filter_map(SolveOutcome::solution)
            .filter(|s| (-W_EPS..=1.0 + W_EPS).contains(&s.w))
            .map(|s| CaseSolution {
                w: s.w.clamp(0.0, 1.0),
                ..*s
            })
            .collect()
    };

    if selected.is_empty() {
        return Err(GeomError::NoCaseSelected(outcomes.map(|o| o.w())));
    }
    let degenerate_median = undefined > 0 || selected.len() > 1;
    Ok(Selection {
        selected,
        degenerate_median,
    })
}

/// Pivot fraction along the edge-bisect for tilt `w`, the positive root of
/// `t² / (1 - t)² = (2 - w) / (1 + w)`. Decreases from `2 - √2` at `w = 0` to
/// `√2 - 1` at `w = 1`.
pub fn t_from_w(w: f64) -> Result<f64> {
    if !(-W_EPS..=1.0 + W_EPS).contains(&w) {
        return Err(GeomError::Domain(w));
    }
    let w = w.clamp(0.0, 1.0);
    Ok(1.0 / (1.0 + ((1.0 + w) / (2.0 - w)).sqrt()))
}

/// Pivot point at fraction `t` along the given case's edge-bisect.
pub fn pivot_point(tri: &Triangle, case: EdgeCase, t: f64) -> Vec2 {
    let Edges { a, b, c } = tri.edges();
    let (vertex, along, across) = match case {
        EdgeCase::A => (tri.vertex(EdgeCase::C), b, a),
        EdgeCase::B => (tri.vertex(EdgeCase::A), c, b),
        EdgeCase::C => (tri.vertex(EdgeCase::B), a, c),
    };
    vertex + along * (1.0 - M) - across * (t * M)
}

/// One selected case with its pivot.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelectedCase {
    pub solution: CaseSolution,
    pub t: f64,
    pub base: Vec2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BisectorResult {
    /// Ordered A, B, C; the first entry is the primary one.
    pub selected: Vec<SelectedCase>,
    pub t: f64,
    pub line: ParamLine,
    pub degenerate_median: bool,
    pub outcomes: [SolveOutcome; 3],
}

impl BisectorResult {
    pub fn primary(&self) -> &SelectedCase {
        &self.selected[0]
    }

    pub fn case(&self) -> EdgeCase {
        self.primary().solution.case
    }

    pub fn w(&self) -> f64 {
        self.primary().solution.w
    }

    /// The line through each selected case's pivot.
    pub fn candidate_lines(&self) -> impl Iterator<Item = ParamLine> + '_ {
        self.selected.iter().map(move |s| ParamLine {
            base: s.base,
            dir: self.line.dir,
        })
    }
}

/// The line with direction `u` that splits `tri` into two equal areas.
pub fn bisecting_line(tri: &Triangle, u: Vec2) -> Result<BisectorResult> {
    let outcomes = case_systems(tri, u)?;
    let selection = select_case(&outcomes)?;
    let selected = selection
        .selected
        .iter()
        .map(|&solution| {
            let t = t_from_w(solution.w)?;
            Ok(SelectedCase {
                solution,
                t,
                base: pivot_point(tri, solution.case, t),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let primary = selected[0];
    Ok(BisectorResult {
        t: primary.t,
        line: ParamLine {
            base: primary.base,
            dir: u,
        },
        selected,
        degenerate_median: selection.degenerate_median,
        outcomes,
    })
}

/// How a query direction was given.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DirectionInput {
    Vector(Vec2),
    Slope(f64),
    Vertical,
}

impl DirectionInput {
    pub fn to_direction(self) -> Vec2 {
        match self {
            DirectionInput::Vector(v) => v,
            DirectionInput::Slope(s) => Vec2::new(1.0, s),
            DirectionInput::Vertical => Vec2::new(0.0, 1.0),
        }
    }
}

/// One member of the sampled bisector family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyMember {
    pub case: EdgeCase,
    /// Nominal sample position in `[0, 1]`.
    pub w: f64,
    pub t: f64,
    pub line: ParamLine,
}

/// Samples `n` evenly spaced tilts per case and solves each resulting
/// direction. Output is ordered by case, then ascending `w`; `3n` members.
pub fn sample_family(tri: &Triangle, n: usize) -> Result<Vec<FamilyMember>> {
    if n < 2 {
        return Err(GeomError::TooFewSamples(n));
    }
    let mut out = Vec::with_capacity(3 * n);
    for case in EdgeCase::ALL {
        for k in 0..n {
            let w = k as f64 / (n - 1) as f64;
            let u = tilt_direction(tri, case, w);
            let result = bisecting_line(tri, u)?;
            // at a median both neighbouring cases qualify; report the sampled one
            let chosen = result
                .selected
                .iter()
                .find(|s| s.solution.case == case)
                .unwrap_or(result.primary());
            out.push(FamilyMember {
                case,
                w,
                t: chosen.t,
                line: ParamLine {
                    base: chosen.base,
                    dir: u,
                },
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::new(x, y)
    }

    fn example_triangle() -> Triangle {
        Triangle::new(v(4.0, 2.0), v(1.0, 9.0), v(10.0, 1.0)).unwrap()
    }

    fn round2(x: f64) -> f64 {
        (x * 100.0).round() / 100.0
    }

    fn pairs(outcomes: &[SolveOutcome; 3]) -> [Option<(f64, f64)>; 3] {
        outcomes.map(|o| o.solution().map(|s| (round2(s.x), round2(s.w))))
    }

    #[test]
    fn solve_p_examples() {
        let p = solve_p(v(-3.0, 2.0), v(3.0, 6.0), v(12.0, -15.0)).unwrap();
        assert_eq!((p.x, p.w), (-4.875, 0.875));
        let p = solve_p(v(3.0, 2.0), v(12.0, -15.0), v(-15.0, 9.0)).unwrap();
        assert_eq!((round2(p.x), round2(p.w)), (-1.70, 0.83));
        assert_eq!(solve_p(v(-4.0, 5.0), v(12.0, -15.0), v(-15.0, 9.0)), None);
    }

    #[test]
    fn case_systems_examples() {
        let t = example_triangle();
        let o = case_systems(&t, v(-3.0, 2.0)).unwrap();
        assert_eq!(
            pairs(&o),
            [Some((-4.88, 0.88)), Some((5.57, -0.14)), Some((39.0, 8.0))]
        );
        let o = case_systems(&t, v(3.0, 2.0)).unwrap();
        assert_eq!(
            pairs(&o),
            [Some((9.75, 5.75)), Some((-1.70, 0.83)), Some((2.05, -0.21))]
        );
        let o = case_systems(&t, v(-4.0, 5.0)).unwrap();
        assert_eq!(pairs(&o), [Some((-3.0, 0.0)), None, Some((3.0, 1.0))]);
        assert_eq!(o[1], SolveOutcome::Undefined(EdgeCase::B));
        assert!(matches!(
            case_systems(&t, Vec2::ZERO),
            Err(GeomError::DegenerateDirection { .. })
        ));
    }

    #[test]
    fn select_case_examples() {
        let t = example_triangle();
        let s = select_case(&case_systems(&t, v(-3.0, 2.0)).unwrap()).unwrap();
        assert_eq!(s.selected.len(), 1);
        assert_eq!(s.selected[0].case, EdgeCase::A);
        assert_eq!(s.selected[0].w, 0.875);
        assert!(!s.degenerate_median);

        let s = select_case(&case_systems(&t, v(-4.0, 5.0)).unwrap()).unwrap();
        let got: Vec<_> = s.selected.iter().map(|c| (c.case, c.w)).collect();
        assert_eq!(got, vec![(EdgeCase::A, 0.0), (EdgeCase::C, 1.0)]);
        assert!(s.degenerate_median);

        let s = select_case(&case_systems(&t, t.edges().b).unwrap()).unwrap();
        assert_eq!(s.selected.len(), 1);
        assert_eq!(s.selected[0].case, EdgeCase::B);
        assert!((s.selected[0].w - 0.5).abs() < 1e-15);
    }

    #[test]
    fn select_case_rejects_out_of_range() {
        let bad = EdgeCase::ALL.map(|case| {
            SolveOutcome::Defined(CaseSolution {
                case,
                x: 1.0,
                w: 2.0,
            })
        });
        assert!(matches!(
            select_case(&bad),
            Err(GeomError::NoCaseSelected(_))
        ));
    }

    #[test]
    fn t_from_w_examples() {
        assert!((t_from_w(0.0).unwrap() - (2.0 - SQRT_2)).abs() < 1e-15);
        assert!((t_from_w(1.0).unwrap() - (SQRT_2 - 1.0)).abs() < 1e-15);
        assert_eq!(t_from_w(0.5).unwrap(), 0.5);
        assert_eq!(round2(t_from_w(0.875).unwrap()), 0.44);
        assert_eq!(t_from_w(1.0 + 1e-10).unwrap(), t_from_w(1.0).unwrap());
        assert_eq!(t_from_w(-0.1), Err(GeomError::Domain(-0.1)));
        assert!(t_from_w(f64::NAN).is_err());
    }

    #[test]
    fn t_from_w_decreasing() {
        let ts: Vec<f64> = (0..=100)
            .map(|k| t_from_w(k as f64 / 100.0).unwrap())
            .collect();
        assert!(ts.windows(2).all(|p| p[1] < p[0]));
    }

    #[test]
    fn bisecting_line_example_queries() {
        let t = example_triangle();
        let r = bisecting_line(&t, v(-3.0, 2.0)).unwrap();
        assert_eq!(r.case(), EdgeCase::A);
        let y = r.line.y_intercept().unwrap();
        assert!((y - 7.4).abs() < 0.05, "{y}");

        let r = bisecting_line(&t, v(3.0, 2.0)).unwrap();
        assert_eq!(r.case(), EdgeCase::B);
        assert_eq!(round2(r.t), 0.44);
        let y = r.line.y_intercept().unwrap();
        assert!((y - 0.4).abs() < 0.05, "{y}");
    }

    #[test]
    fn bisecting_line_along_median() {
        let t = example_triangle();
        let r = bisecting_line(&t, v(-4.0, 5.0)).unwrap();
        assert!(r.degenerate_median);
        assert_eq!(r.selected.len(), 2);
        for line in r.candidate_lines() {
            assert!(line.distance_to(v(1.0, 9.0)) < 1e-9);
            assert!(line.distance_to(v(7.0, 1.5)) < 1e-9);
        }
    }

    #[test]
    fn bisecting_line_parallel_to_edge_is_edge_bisect() {
        let t = example_triangle();
        for case in EdgeCase::ALL {
            let r = bisecting_line(&t, t.edges().get(case)).unwrap();
            assert_eq!(r.case(), case);
            assert!((r.t - 0.5).abs() < 1e-12);
            let eb = t.edge_bisect(case);
            assert!(eb.distance_to(r.line.base) < 1e-12);
        }
    }

    #[test]
    fn slope_inputs() {
        assert_eq!(DirectionInput::Slope(2.0).to_direction(), v(1.0, 2.0));
        assert_eq!(DirectionInput::Vertical.to_direction(), v(0.0, 1.0));
        let r =
            bisecting_line(&example_triangle(), DirectionInput::Vertical.to_direction()).unwrap();
        assert_eq!(r.line.y_intercept(), None);
    }

    #[test]
    fn family_small() {
        let t = example_triangle();
        assert_eq!(sample_family(&t, 1), Err(GeomError::TooFewSamples(1)));
        let fam = sample_family(&t, 2).unwrap();
        assert_eq!(fam.len(), 6);
        // w=1 of one case and w=0 of the next are the same median
        for (i, j) in [(1, 2), (3, 4), (5, 0)] {
            let (p, q) = (fam[i].line, fam[j].line);
            assert!(p.dir.cross(q.dir).abs() <= 1e-12 * p.dir.norm() * q.dir.norm());
            assert!(p.distance_to(q.base) < 1e-9);
        }
    }

    #[test]
    fn family_midpoints_are_edge_bisects() {
        let t = example_triangle();
        let fam = sample_family(&t, 5).unwrap();
        for m in fam.iter().filter(|m| m.w == 0.5) {
            assert!((m.t - 0.5).abs() < 1e-12);
            assert!(t.edge_bisect(m.case).distance_to(m.line.base) < 1e-12);
        }
        let cases: Vec<_> = fam.iter().map(|m| m.case).collect();
        let mut sorted = cases.clone();
        sorted.sort();
        assert_eq!(cases, sorted);
    }
}
