//! Connected series and Gopakumar-Vafa invariants.

mod assemble;
mod fit;
mod table;

pub use assemble::{banana_partition_function, connected_series, BlockSource};
pub use fit::psi_basis_fit;
pub use table::{gv_invariants, GVRow, GVTable};
