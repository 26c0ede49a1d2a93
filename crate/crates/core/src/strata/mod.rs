//! Partition functions of section classes assembled two ways: stratified sums of vertex
//! weights over the Chow variety, and the closed product forms.

mod gweights;
mod phi;
mod precision;
mod table;
mod theorem_a;
mod theorem_b;

pub use gweights::{g_weight, GKind};
pub use phi::{phi, phi_closed, phi_gf, PhiKind};
pub use table::{Part, Prefactor, StrataTable, StratumRecord, VertexWord, BANANA_POINTS};
pub use theorem_a::{theorem_a_closed, theorem_a_leading, theorem_a_stratified};
pub use theorem_b::{group_factor, theorem_b_closed, theorem_b_stratified};
