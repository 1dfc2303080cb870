//! 2D vectors, parametric lines, convex polygons, and half-plane clipping.
//!
//! Conventions:
//! - `perp` is the counter-clockwise quarter turn `(x, y) -> (-y, x)`.
//! - `cross(u, v) = dot(v, perp(u))`, positive when `v` lies to the left of `u`.
//! - The left side of a [`ParamLine`] is where `cross(dir, p - base) >= 0`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{GeomError, Result};

/// Relative factor for deciding that a vector is zero.
pub const ZERO_VECTOR_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Like [`Vec2::new`] but rejects NaN and infinities.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        let v = Self { x, y };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(GeomError::NonFinite("vector"))
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// `self.x * other.y - self.y * other.x`.
    #[inline]
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn max_norm(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn normalized(self) -> Vec2 {
        self / self.norm()
    }

    /// True when the max-norm is below `1e-12 * (1 + scale)`, where `scale`
    /// is the largest coordinate magnitude of the surrounding geometry.
    pub fn is_negligible(self, scale: f64) -> bool {
        self.max_norm() < ZERO_VECTOR_EPS * (1.0 + scale.abs())
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: Vec2) -> Vec2 {
        rhs * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x / rhs, self.y / rhs)
    }
}

impl From<(f64, f64)> for Vec2 {
    fn from((x, y): (f64, f64)) -> Self {
        Vec2::new(x, y)
    }
}

#[inline]
pub fn perp(v: Vec2) -> Vec2 {
    v.perp()
}

#[inline]
pub fn dot(u: Vec2, v: Vec2) -> f64 {
    u.dot(v)
}

/// An infinite line `base + dir * s`, `s` real.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamLine {
    pub base: Vec2,
    pub dir: Vec2,
}

impl ParamLine {
    pub fn new(base: Vec2, dir: Vec2) -> Result<Self> {
        if !base.is_finite() || !dir.is_finite() {
            return Err(GeomError::NonFinite("line"));
        }
        if dir.is_negligible(base.max_norm()) {
            return Err(GeomError::DegenerateDirection { x: dir.x, y: dir.y });
        }
        Ok(Self { base, dir })
    }

    /// Line through two distinct points, directed from `p` to `q`.
    pub fn through(p: Vec2, q: Vec2) -> Result<Self> {
        Self::new(p, q - p)
    }

    pub fn point_at(&self, s: f64) -> Vec2 {
        self.base + self.dir * s
    }

    /// Positive left of the line, negative right, scaled by `|dir|`.
    #[inline]
    pub fn side(&self, p: Vec2) -> f64 {
        self.dir.cross(p - self.base)
    }

    /// Euclidean distance from `p` to the line.
    pub fn distance_to(&self, p: Vec2) -> f64 {
        self.side(p).abs() / self.dir.norm()
    }

    /// Signed offset `dot(base, perp(unit dir))`. Parallel lines with the same
    /// orientation differ only in this value.
    pub fn offset(&self) -> f64 {
        self.base.dot(self.dir.normalized().perp())
    }

    /// Offset measured along the normal of `reference`, so that lines with
    /// opposite orientations can be compared.
    pub fn offset_along(&self, reference: Vec2) -> f64 {
        self.base.dot(reference.normalized().perp())
    }

    pub fn y_intercept(&self) -> Option<f64> {
        y_intercept(self)
    }
}

/// Value of `y` where the line meets the vertical axis, or `None` for a
/// vertical line.
pub fn y_intercept(line: &ParamLine) -> Option<f64> {
    let d = line.dir;
    if d.x.abs() <= ZERO_VECTOR_EPS * d.norm() {
        return None;
    }
    Some(line.base.y - line.base.x * d.y / d.x)
}

/// Convex polygon with vertices in a consistent winding. May be empty, which
/// is how [`clip_by_line`] reports a side the line does not reach.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConvexPoly {
    vertices: Vec<Vec2>,
}

impl ConvexPoly {
    pub fn new(vertices: Vec<Vec2>) -> Result<Self> {
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite("polygon"));
        }
        if !is_convex(&vertices) {
            return Err(GeomError::NotConvex);
        }
        Ok(Self { vertices })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> Result<f64> {
        shoelace_area(&self.vertices)
    }

    /// Area, treating an empty polygon as zero.
    pub fn area_or_zero(&self) -> f64 {
        if self.vertices.len() < 3 {
            0.0
        } else {
            signed_area(&self.vertices).abs()
        }
    }
}

fn is_convex(vertices: &[Vec2]) -> bool {
    let n = vertices.len();
    if n < 4 {
        return true;
    }
    let mut sign = 0.0_f64;
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        let r = vertices[(i + 2) % n];
        let turn = (q - p).cross(r - q);
        if turn != 0.0 {
            if sign != 0.0 && turn.signum() != sign {
                return false;
            }
            sign = turn.signum();
        }
    }
    true
}

/// Signed shoelace area, positive for counter-clockwise winding. Coordinates
/// are taken relative to the first vertex.
fn signed_area(vertices: &[Vec2]) -> f64 {
    let origin = vertices[0];
    let mut twice = 0.0;
    for i in 1..vertices.len() - 1 {
        twice += (vertices[i] - origin).cross(vertices[i + 1] - origin);
    }
    0.5 * twice
}

/// Absolute area of a simple polygon.
pub fn shoelace_area(vertices: &[Vec2]) -> Result<f64> {
    if vertices.len() < 3 {
        return Err(GeomError::DegeneratePolygon(vertices.len()));
    }
    Ok(signed_area(vertices).abs())
}

/// Splits a convex polygon by a line into its left and right parts, in that
/// order.
///
/// Vertices on the line are shared by both parts. A part with no vertex
/// strictly on its own side is returned empty, so a line running along an
/// edge leaves the whole polygon on the left when the interior is there, and
/// on the right otherwise.
pub fn clip_by_line(poly: &ConvexPoly, line: &ParamLine) -> Result<(ConvexPoly, ConvexPoly)> {
    let n = poly.len();
    if n < 3 {
        return Err(GeomError::DegeneratePolygon(n));
    }
    if line.dir.is_negligible(line.base.max_norm()) {
        return Err(GeomError::DegenerateDirection {
            x: line.dir.x,
            y: line.dir.y,
        });
    }
    let verts = poly.vertices();
    let sides: Vec<f64> = verts.iter().map(|&p| line.side(p)).collect();

    let mut left = Vec::with_capacity(n + 1);
    let mut right = Vec::with_capacity(n + 1);
    for i in 0..n {
        let j = (i + 1) % n;
        let (p, sp) = (verts[i], sides[i]);
        let (q, sq) = (verts[j], sides[j]);
        if sp >= 0.0 {
            left.push(p);
        }
        if sp <= 0.0 {
            right.push(p);
        }
        if (sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0) {
            let x = p + (q - p) * (sp / (sp - sq));
            left.push(x);
            right.push(x);
        }
    }

    let has_left = sides.iter().any(|&s| s > 0.0);
    let has_right = sides.iter().any(|&s| s < 0.0);
    let left = if has_left { left } else { Vec::new() };
    let right = if has_right { right } else { Vec::new() };
    Ok((
        ConvexPoly { vertices: left },
        ConvexPoly { vertices: right },
    ))
}
