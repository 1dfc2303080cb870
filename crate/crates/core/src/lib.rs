//! Area bisectors of triangles in a prescribed direction.
//!
//! [`solver::bisecting_line`] computes the answer in closed form by pivoting
//! on one of the three edge-parallel bisectors; [`oracle`] checks any line by
//! clipping and finds the bisector independently by a monotone offset search.

pub mod error;
pub mod geom;
pub mod oracle;
pub mod solver;
pub mod triangle;

pub use error::{GeomError, Result};
pub use geom::{clip_by_line, dot, perp, shoelace_area, y_intercept, ConvexPoly, ParamLine, Vec2};
pub use oracle::{brute_force_bisector, check_bisection, AuditRecord};
pub use solver::{
    bisecting_line, case_systems, sample_family, select_case, solve_p, t_from_w, BisectorResult,
    CaseSolution, DirectionInput, FamilyMember, SolveOutcome,
};
pub use triangle::{EdgeCase, Edges, Triangle, M};
