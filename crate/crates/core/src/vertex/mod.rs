//! The topological vertex: box counting and the closed Schur formula.

mod brute;
mod closed;
mod schur;
mod volume;

pub use brute::{vertex_brute, vertex_brute_with_budget, DEFAULT_BUDGET, MAX_EXTRA_LIMIT};
pub use closed::{vertex_closed, VertexTable};
pub use schur::{complete_homogeneous, schur_principal, skew_schur_from_h};
pub use volume::{chi_thickened, min_renorm_volume, Thickened, VertexKey};
