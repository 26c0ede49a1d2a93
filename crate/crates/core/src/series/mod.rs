//! Exact truncated series: Laurent series in q = p^{1/2} and power series in the
//! curve-class variables over them.

mod laurent;
mod qseries;
mod report;

pub use laurent::{rat, HalfLaurent, Rat};
pub use qseries::{QExp, QMonomial, QSeries, VAR_NAMES};
pub use report::{rat_from_str, rat_to_string, LaurentReport, SeriesReport};
