//! Ground truth for area bisection that shares nothing with the solver: clip
//! the triangle and measure, or search for the bisecting offset directly.

use crate::error::{GeomError, Result};
use crate::geom::{clip_by_line, ParamLine, Vec2};
use crate::triangle::Triangle;

/// Stop searching once the two areas differ by this fraction of the total.
pub const SEARCH_GAP: f64 = 1e-12;
pub const SEARCH_MAX_ITERS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AuditRecord {
    pub area_left: f64,
    pub area_right: f64,
    pub total: f64,
    /// `|left - right| / total`
    pub relative_gap: f64,
    pub passed: bool,
}

fn split_areas(tri: &Triangle, line: &ParamLine) -> Result<(f64, f64)> {
    let (left, right) = clip_by_line(&tri.to_poly(), line)?;
    Ok((left.area_or_zero(), right.area_or_zero()))
}

/// Clips `tri` by `line` and passes when the two sides differ by at most
/// `tol` of the total area.
pub fn check_bisection(tri: &Triangle, line: &ParamLine, tol: f64) -> Result<AuditRecord> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(GeomError::InvalidTolerance(tol));
    }
    let (area_left, area_right) = split_areas(tri, line)?;
    let total = tri.area();
    let relative_gap = (area_left - area_right).abs() / total;
    Ok(AuditRecord {
        area_left,
        area_right,
        total,
        relative_gap,
        passed: relative_gap <= tol,
    })
}

/// Line with direction `u` at signed offset `c` along the unit normal
/// `perp(u/|u|)`, based near the triangle's centroid.
pub fn line_at_offset(tri: &Triangle, u: Vec2, c: f64) -> ParamLine {
    let normal = u.normalized().perp();
    let [a, b, cc] = tri.vertices();
    let centroid = (a + b + cc) / 3.0;
    ParamLine {
        base: centroid + normal * (c - centroid.dot(normal)),
        dir: u,
    }
}

/// Range of offsets over which a line with direction `u` meets the triangle.
pub fn offset_bracket(tri: &Triangle, u: Vec2) -> (f64, f64) {
    let normal = u.normalized().perp();
    tri.vertices()
        .iter()
        .map(|p| p.dot(normal))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), d| {
            (lo.min(d), hi.max(d))
        })
}

/// Area left of the line at offset `c`. Non-increasing in `c`.
pub fn left_area_at_offset(tri: &Triangle, u: Vec2, c: f64) -> Result<f64> {
    Ok(split_areas(tri, &line_at_offset(tri, u, c))?.0)
}

/// Finds the bisector with direction `u` by bisection on the offset.
pub fn brute_force_bisector(tri: &Triangle, u: Vec2) -> Result<ParamLine> {
    if !u.is_finite() {
        return Err(GeomError::NonFinite("direction"));
    }
    if u.is_negligible(0.0) {
        return Err(GeomError::DegenerateDirection { x: u.x, y: u.y });
    }
    let total = tri.area();
    let (mut lo, mut hi) = offset_bracket(tri, u);
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..SEARCH_MAX_ITERS {
        mid = 0.5 * (lo + hi);
        let (left, right) = split_areas(tri, &line_at_offset(tri, u, mid))?;
        if (left - right).abs() <= SEARCH_GAP * total {
            break;
        }
        if left > right {
            lo = mid;
        } else {
            hi = mid;
        }
        if mid <= lo && mid >= hi {
            break;
        }
    }
    Ok(line_at_offset(tri, u, mid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::M;

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::new(x, y)
    }

    fn example_triangle() -> Triangle {
        Triangle::new(v(4.0, 2.0), v(1.0, 9.0), v(10.0, 1.0)).unwrap()
    }

    #[test]
    fn medians_pass() {
        let t = example_triangle();
        for line in [
            ParamLine::through(v(1.0, 9.0), v(7.0, 1.5)).unwrap(),
            ParamLine::through(v(4.0, 2.0), v(5.5, 5.0)).unwrap(),
            ParamLine::through(v(10.0, 1.0), v(2.5, 5.5)).unwrap(),
        ] {
            let rec = check_bisection(&t, &line, 1e-12).unwrap();
            assert!(rec.passed, "{rec:?}");
            assert!(rec.relative_gap < 1e-14);
        }
    }

    #[test]
    fn edge_as_line_fails() {
        let t = example_triangle();
        let line = ParamLine::through(v(10.0, 1.0), v(4.0, 2.0)).unwrap();
        let rec = check_bisection(&t, &line, 1e-9).unwrap();
        assert!(!rec.passed);
        assert_eq!(rec.relative_gap, 1.0);
        assert_eq!(rec.area_left + rec.area_right, rec.total);
    }

    #[test]
    fn check_rejects_bad_tolerance() {
        let line = ParamLine::through(v(1.0, 9.0), v(7.0, 1.5)).unwrap();
        assert_eq!(
            check_bisection(&example_triangle(), &line, 0.0),
            Err(GeomError::InvalidTolerance(0.0))
        );
    }

    #[test]
    fn brute_force_unit_right_horizontal() {
        let t = Triangle::new(v(0.0, 0.0), v(1.0, 0.0), v(0.0, 1.0)).unwrap();
        let line = brute_force_bisector(&t, v(1.0, 0.0)).unwrap();
        assert!((line.base.y - (1.0 - M)).abs() < 1e-9);
        assert_eq!(line.dir, v(1.0, 0.0));
    }

    #[test]
    fn brute_force_median() {
        let line = brute_force_bisector(&example_triangle(), v(-4.0, 5.0)).unwrap();
        assert!(line.distance_to(v(1.0, 9.0)) < 1e-9);
        assert!(line.distance_to(v(7.0, 1.5)) < 1e-9);
    }

    #[test]
    fn brute_force_example_intercept() {
        let line = brute_force_bisector(&example_triangle(), v(3.0, 2.0)).unwrap();
        let y = line.y_intercept().unwrap();
        assert!((y - 0.4).abs() < 0.05, "{y}");
        assert!(
            check_bisection(&example_triangle(), &line, 1e-9)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn brute_force_rejects_zero_direction() {
        assert!(matches!(
            brute_force_bisector(&example_triangle(), Vec2::ZERO),
            Err(GeomError::DegenerateDirection { .. })
        ));
    }

    #[test]
    fn left_area_monotone_on_example_triangle() {
        let t = example_triangle();
        let u = v(3.0, 2.0);
        let (lo, hi) = offset_bracket(&t, u);
        let areas: Vec<f64> = (0..=100)
            .map(|k| lo + (hi - lo) * k as f64 / 100.0)
            .map(|c| left_area_at_offset(&t, u, c).unwrap())
            .collect();
        assert!((areas[0] - 19.5).abs() < 1e-12);
        assert!(areas[100].abs() < 1e-12);
        assert!(areas.windows(2).all(|p| p[1] <= p[0]));
    }
}
