use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("non-finite coordinate in {0}")]
    NonFinite(&'static str),
    #[error("polygon vertices are not in convex position")]
    NotConvex,
    #[error("polygon needs at least 3 vertices, got {0}")]
    DegeneratePolygon(usize),
    #[error("direction vector ({x}, {y}) is zero or negligible")]
    DegenerateDirection { x: f64, y: f64 },
    #[error("triangle is degenerate: twice-area {twice_area:e} below threshold {threshold:e}")]
    DegenerateTriangle { twice_area: f64, threshold: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("tilt parameter w = {0} lies outside [0, 1]")]
    Domain(f64),
    #[error("family sampling needs at least 2 samples per case, got {0}")]
    TooFewSamples(usize),
    #[error("no case system produced w in [0, 1] (w values: {0:?})")]
    NoCaseSelected([Option<f64>; 3]),
}

pub type Result<T> = std::result::Result<T, GeomError>;
