//! Input grammar: a triangle is three `x,y` pairs separated by whitespace,
//! a direction is `dx,dy`, and a slope is a real number or `vertical`.

use tribisect::{DirectionInput, Triangle, Vec2};

use crate::error::CliError;

fn parse_real(what: &'static str, whole: &str, s: &str) -> Result<f64, CliError> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::parse(what, whole, format!("{s:?} is not a number")))?;
    if !v.is_finite() {
        return Err(CliError::parse(what, whole, format!("{s:?} is not finite")));
    }
    Ok(v)
}

fn parse_pair(what: &'static str, whole: &str, s: &str) -> Result<Vec2, CliError> {
    let Some((x, y)) = s.split_once(',') else {
        return Err(CliError::parse(
            what,
            whole,
            format!("expected \"x,y\", got {s:?}"),
        ));
    };
    Ok(Vec2::new(
        parse_real(what, whole, x)?,
        parse_real(what, whole, y)?,
    ))
}

pub fn parse_point(s: &str) -> Result<Vec2, CliError> {
    parse_pair("point", s, s)
}

pub fn parse_triangle(s: &str) -> Result<Triangle, CliError> {
    let pts = s
        .split_whitespace()
        .map(|tok| parse_pair("triangle", s, tok))
        .collect::<Result<Vec<_>, _>>()?;
    let [a, b, c] = pts[..] else {
        return Err(CliError::parse(
            "triangle",
            s,
            format!("expected 3 vertices, got {}", pts.len()),
        ));
    };
    Triangle::new(a, b, c).map_err(|e| CliError::geometry(format!("triangle {s:?}"), e))
}

pub fn parse_direction(s: &str) -> Result<DirectionInput, CliError> {
    parse_pair("direction", s, s).map(DirectionInput::Vector)
}

pub fn parse_slope(s: &str) -> Result<DirectionInput, CliError> {
    if s.trim().eq_ignore_ascii_case("vertical") {
        return Ok(DirectionInput::Vertical);
    }
    parse_real("slope", s, s).map(DirectionInput::Slope)
}
