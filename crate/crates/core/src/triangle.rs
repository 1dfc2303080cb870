//! Triangles with labeled vertices `A, B, C` and edge vectors
//! `a = C - B`, `b = A - C`, `c = B - A`, so that `a + b + c = 0`.
//!
//! Edge `a` is opposite vertex `A`, and likewise for `b` and `c`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use crate::error::{GeomError, Result};
use crate::geom::{ConvexPoly, ParamLine, Vec2};

/// Similarity ratio of the half-area sub-triangle, `1/√2`.
pub const M: f64 = FRAC_1_SQRT_2;

/// A triangle is rejected when twice its area is below this factor times the
/// squared bounding-box diagonal.
pub const DEGENERATE_AREA_EPS: f64 = 1e-10;

/// Which edge, and hence which edge-bisect and case system, is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeCase {
    A,
    B,
    C,
}

impl EdgeCase {
    pub const ALL: [EdgeCase; 3] = [EdgeCase::A, EdgeCase::B, EdgeCase::C];

    pub fn index(self) -> usize {
        match self {
            EdgeCase::A => 0,
            EdgeCase::B => 1,
            EdgeCase::C => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            EdgeCase::A => 'A',
            EdgeCase::B => 'B',
            EdgeCase::C => 'C',
        }
    }
}

impl fmt::Display for EdgeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Edge vectors of a triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edges {
    pub a: Vec2,
    pub b: Vec2,
    pub c: Vec2,
}

impl Edges {
    pub fn get(&self, case: EdgeCase) -> Vec2 {
        match case {
            EdgeCase::A => self.a,
            EdgeCase::B => self.b,
            EdgeCase::C => self.c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    vertices: [Vec2; 3],
}

impl Triangle {
    pub fn new(a: Vec2, b: Vec2, c: Vec2) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::NonFinite("triangle"));
        }
        let tri = Self {
            vertices: [a, b, c],
        };
        let twice_area = tri.twice_signed_area().abs();
        let threshold = DEGENERATE_AREA_EPS * tri.bbox_diagonal().powi(2);
        if twice_area <= threshold {
            return Err(GeomError::DegenerateTriangle {
                twice_area,
                threshold,
            });
        }
        Ok(tri)
    }

    pub fn vertices(&self) -> [Vec2; 3] {
        self.vertices
    }

    pub fn vertex(&self, case: EdgeCase) -> Vec2 {
        self.vertices[case.index()]
    }

    /// Same triangle with the winding reversed, relabeled as `(C, B, A)`.
    pub fn reversed(&self) -> Triangle {
        let [a, b, c] = self.vertices;
        Triangle {
            vertices: [c, b, a],
        }
    }

    pub fn translated(&self, d: Vec2) -> Triangle {
        Triangle {
            vertices: self.vertices.map(|p| p + d),
        }
    }

    pub fn edges(&self) -> Edges {
        let [a, b, c] = self.vertices;
        Edges {
            a: c - b,
            b: a - c,
            c: b - a,
        }
    }

    /// Median directions `(b - a, c - b, a - c)`: from `C`, `A` and `B`
    /// respectively toward the midpoint of the opposite edge.
    pub fn medians(&self) -> (Vec2, Vec2, Vec2) {
        let e = self.edges();
        (e.b - e.a, e.c - e.b, e.a - e.c)
    }

    /// Median line from the given vertex through the midpoint of the opposite
    /// edge.
    pub fn median_line(&self, from: EdgeCase) -> ParamLine {
        let [a, b, c] = self.vertices;
        let (v, p, q) = match from {
            EdgeCase::A => (a, b, c),
            EdgeCase::B => (b, c, a),
            EdgeCase::C => (c, a, b),
        };
        ParamLine {
            base: v,
            dir: (p + q) * 0.5 - v,
        }
    }

    pub fn twice_signed_area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        (b - a).cross(c - a)
    }

    pub fn area(&self) -> f64 {
        0.5 * self.twice_signed_area().abs()
    }

    pub fn is_ccw(&self) -> bool {
        self.twice_signed_area() > 0.0
    }

    pub fn bbox(&self) -> (Vec2, Vec2) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for p in &self.vertices[1..] {
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }

    pub fn bbox_diagonal(&self) -> f64 {
        let (lo, hi) = self.bbox();
        (hi - lo).norm()
    }

    /// Longest edge length.
    pub fn diameter(&self) -> f64 {
        let e = self.edges();
        e.a.norm().max(e.b.norm()).max(e.c.norm())
    }

    /// Largest absolute vertex coordinate.
    pub fn coordinate_scale(&self) -> f64 {
        self.vertices
            .iter()
            .map(|p| p.max_norm())
            .fold(0.0, f64::max)
    }

    pub fn to_poly(&self) -> ConvexPoly {
        ConvexPoly::new(self.vertices.to_vec()).expect("triangles are convex")
    }

    /// The area-bisecting line parallel to the given edge.
    ///
    /// It cuts the two sides meeting at the opposite vertex `V` at
    /// `V + m (P - V)` with `m = 1/√2`. The base is the cut on the side toward
    /// the edge's tail, and the direction is the edge vector.
    pub fn edge_bisect(&self, case: EdgeCase) -> ParamLine {
        let [a, b, c] = self.vertices;
        // (opposite vertex, tail of the edge)
        let (v, tail) = match case {
            EdgeCase::A => (a, b),
            EdgeCase::B => (b, c),
            EdgeCase::C => (c, a),
        };
        ParamLine {
            base: v + (tail - v) * M,
            dir: self.edges().get(case),
        }
    }
}
