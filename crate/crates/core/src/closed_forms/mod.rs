//! Closed-form building blocks: MacMahon functions, psi_g, theta quotient coefficients and
//! the fibre-class partition function.

mod macmahon;
mod products;
mod psi;
mod theta;

pub use macmahon::{binomial_factor, macmahon, macmahon_pow, macmahon_unit, plane_partition_counts};
pub(crate) use macmahon::{binomial_template, macmahon_template, template_mul};
pub use products::{section_product, z_fibre_closed};
pub use psi::psi;
pub use theta::{norm_d, theta_coeffs, ThetaCoeffTable, ThetaRow};
