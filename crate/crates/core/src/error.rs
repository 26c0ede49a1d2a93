use thiserror::Error;

/// Errors raised by series arithmetic, enumeration and table handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window exhausted: need q-precision {needed}, have {have}")]
    WindowExhausted { needed: i64, have: i64 },

    #[error("series is not a unit: {0}")]
    NonUnit(String),

    #[error("log needs constant term exactly 1")]
    LogConstant,

    #[error("Q-exponent {exp:?} lies outside caps {caps:?}")]
    OutsideCaps { exp: [u32; 4], caps: [u32; 4] },

    #[error("caps mismatch: {0:?} vs {1:?}")]
    CapsMismatch([u32; 4], [u32; 4]),

    #[error("enumeration budget exceeded after {0} configurations")]
    Budget(usize),

    #[error("not in psi-span within window: {0}")]
    NotInPsiSpan(String),

    #[error("non-integral invariant {value} for class {beta:?}, genus {genus}")]
    NonIntegral { beta: [u32; 4], genus: u32, value: String },

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("strata table: {0}")]
    Strata(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::WindowExhausted { .. } => "window-exhausted",
            Error::NonUnit(_) => "non-unit",
            Error::LogConstant => "log-constant",
            Error::OutsideCaps { .. } => "outside-caps",
            Error::CapsMismatch(..) => "caps-mismatch",
            Error::Budget(_) => "budget",
            Error::NotInPsiSpan(_) => "not-in-psi-span",
            Error::NonIntegral { .. } => "non-integral",
            Error::Partition(_) => "partition",
            Error::Strata(_) => "strata",
            Error::Parse(_) => "parse",
            Error::Mismatch(_) => "mismatch",
        }
    }
}
