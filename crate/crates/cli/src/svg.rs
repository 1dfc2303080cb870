//! Standalone SVG plot of a triangle, its edge-bisects and queried bisectors.
//!
//! Styling is fixed by [`STYLE`] so renders are stable for golden tests.

use std::fmt::Write;

use tribisect::{EdgeCase, ParamLine, Triangle, Vec2};

pub struct Stroke {
    pub color: &'static str,
    pub width: f64,
    /// `None` for a solid stroke.
    pub dash: Option<&'static str>,
}

pub struct Style {
    pub triangle: Stroke,
    pub edge_bisect: Stroke,
    pub bisector: Stroke,
    pub axis: Stroke,
    pub canvas: f64,
    pub pad: f64,
    pub tick_len: f64,
    pub font_size: f64,
    /// Fraction of the triangle's extent added on every side.
    pub margin: f64,
}

pub const STYLE: Style = Style {
    triangle: Stroke {
        color: "#000000",
        width: 2.0,
        dash: None,
    },
    edge_bisect: Stroke {
        color: "#555555",
        width: 1.2,
        dash: Some("2,4"),
    },
    bisector: Stroke {
        color: "#c0392b",
        width: 1.5,
        dash: Some("8,5"),
    },
    axis: Stroke {
        color: "#000000",
        width: 1.0,
        dash: None,
    },
    canvas: 600.0,
    pad: 48.0,
    tick_len: 5.0,
    font_size: 12.0,
    margin: 0.1,
};

fn stroke_attrs(s: &Stroke) -> String {
    let mut a = format!(
        "stroke=\"{}\" stroke-width=\"{}\" fill=\"none\"",
        s.color, s.width
    );
    if let Some(d) = s.dash {
        let _ = write!(a, " stroke-dasharray=\"{d}\"");
    }
    a
}

/// World-space window, square so that both axes share one scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub lo: Vec2,
    pub hi: Vec2,
}

impl Viewport {
    pub fn fit(tri: &Triangle, margin: f64) -> Self {
        let (lo, hi) = tri.bbox();
        let center = (lo + hi) * 0.5;
        let extent = (hi - lo).max_norm();
        let half = 0.5 * extent * (1.0 + 2.0 * margin);
        let h = Vec2::new(half, half);
        Self {
            lo: center - h,
            hi: center + h,
        }
    }

    fn screen(&self, p: Vec2) -> (f64, f64) {
        let s = STYLE.canvas / (self.hi.x - self.lo.x);
        (
            STYLE.pad + (p.x - self.lo.x) * s,
            STYLE.pad + (self.hi.y - p.y) * s,
        )
    }

    /// Segment of `line` inside the window.
    pub fn clip(&self, line: &ParamLine) -> Option<(Vec2, Vec2)> {
        let (mut s0, mut s1) = (f64::NEG_INFINITY, f64::INFINITY);
        for (p, d, lo, hi) in [
            (line.base.x, line.dir.x, self.lo.x, self.hi.x),
            (line.base.y, line.dir.y, self.lo.y, self.hi.y),
        ] {
            if d == 0.0 {
                if p < lo || p > hi {
                    return None;
                }
                continue;
            }
            let (a, b) = ((lo - p) / d, (hi - p) / d);
            s0 = s0.max(a.min(b));
            s1 = s1.min(a.max(b));
        }
        (s0 < s1).then(|| (line.point_at(s0), line.point_at(s1)))
    }
}

/// Tick positions at a 1-2-5 step covering `[lo, hi]`.
pub fn ticks(lo: f64, hi: f64, target: usize) -> Vec<f64> {
    let raw = (hi - lo) / target.max(1) as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn tick_label(v: f64) -> String {
    let s = format!("{:.6}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn line_element(out: &mut String, vp: &Viewport, line: &ParamLine, stroke: &Stroke, class: &str) {
    if let Some((p, q)) = vp.clip(line) {
        let (x1, y1) = vp.screen(p);
        let (x2, y2) = vp.screen(q);
        let _ = writeln!(
            out,
            "  <line class=\"{class}\" x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" {}/>",
            stroke_attrs(stroke)
        );
    }
}

/// Renders the triangle outline (solid), the three edge-bisects (dotted) and
/// each line in `bisectors` (dashed), with framed axes and tick labels.
pub fn render(tri: &Triangle, bisectors: &[ParamLine]) -> String {
    let vp = Viewport::fit(tri, STYLE.margin);
    let size = STYLE.canvas + 2.0 * STYLE.pad;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>"
    );
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    let _ = writeln!(
        out,
        "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>"
    );

    // axes frame along the left and bottom of the plotting area
    let left = STYLE.pad;
    let bottom = STYLE.pad + STYLE.canvas;
    let right = STYLE.pad + STYLE.canvas;
    let axis = stroke_attrs(&STYLE.axis);
    let _ = writeln!(
        out,
        "  <line class=\"axis\" x1=\"{left}\" y1=\"{bottom}\" x2=\"{right}\" y2=\"{bottom}\" {axis}/>"
    );
    let _ = writeln!(
        out,
        "  <line class=\"axis\" x1=\"{left}\" y1=\"{left}\" x2=\"{left}\" y2=\"{bottom}\" {axis}/>"
    );
    let font = STYLE.font_size;
    for x in ticks(vp.lo.x, vp.hi.x, 8) {
        let (sx, _) = vp.screen(Vec2::new(x, vp.lo.y));
        let _ = writeln!(
            out,
            "  <line class=\"tick\" x1=\"{sx:.3}\" y1=\"{bottom}\" x2=\"{sx:.3}\" y2=\"{}\" {axis}/>",
            bottom + STYLE.tick_len
        );
        let _ = writeln!(
            out,
            "  <text x=\"{sx:.3}\" y=\"{}\" font-size=\"{font}\" font-family=\"sans-serif\" text-anchor=\"middle\">{}</text>",
            bottom + STYLE.tick_len + font + 2.0,
            tick_label(x)
        );
    }
    for y in ticks(vp.lo.y, vp.hi.y, 8) {
        let (_, sy) = vp.screen(Vec2::new(vp.lo.x, y));
        let _ = writeln!(
            out,
            "  <line class=\"tick\" x1=\"{}\" y1=\"{sy:.3}\" x2=\"{left}\" y2=\"{sy:.3}\" {axis}/>",
            left - STYLE.tick_len
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{:.3}\" font-size=\"{font}\" font-family=\"sans-serif\" text-anchor=\"end\">{}</text>",
            left - STYLE.tick_len - 2.0,
            sy + font / 3.0,
            tick_label(y)
        );
    }

    let pts: Vec<String> = tri
        .vertices()
        .iter()
        .map(|&p| {
            let (x, y) = vp.screen(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        "  <polygon class=\"triangle\" points=\"{}\" {}/>",
        pts.join(" "),
        stroke_attrs(&STYLE.triangle)
    );
    for case in EdgeCase::ALL {
        line_element(
            &mut out,
            &vp,
            &tri.edge_bisect(case),
            &STYLE.edge_bisect,
            "edge-bisect",
        );
    }
    for line in bisectors {
        line_element(&mut out, &vp, line, &STYLE.bisector, "bisector");
    }
    let _ = writeln!(out, "</svg>");
    out
}
