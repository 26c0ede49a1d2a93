//! Topological vertex computations and the unweighted DT/GV partition functions of the
//! banana threefold for classes built from a section and banana curves.

pub mod closed_forms;
pub mod error;
pub mod gv;
pub mod identities;
pub mod partitions;
pub mod series;
pub mod strata;
pub mod vertex;

pub use error::{Error, Result};
