//! Named vertex and generating-function identities, each checked coefficientwise.

mod sums;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{partitions_up_to, Partition};
use crate::series::{HalfLaurent, QSeries};
use crate::vertex::VertexKey;

pub use sums::{
    banana_double_closed, banana_double_sum, oracle_legs, phi_printed_pp, rank3_product, rank3_sum,
    section_square_closed, section_square_sum, trace_closed, trace_sum,
};

/// Every identity the suite knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    VertexOracle,
    VertexSquares,
    VertexSplitting,
    VertexNormalization,
    Trace1,
    Trace2,
    Trace3,
    Trace4,
    BananaDouble,
    BananaEe,
    BananaMm,
    BananaPp,
    SectionMe,
    SectionPe,
    SectionSquare,
    PhiClosed,
    Rank3Theta,
}

impl Identity {
    pub const ALL: [Identity; 17] = [
        Identity::VertexOracle,
        Identity::VertexSquares,
        Identity::VertexSplitting,
        Identity::VertexNormalization,
        Identity::Trace1,
        Identity::Trace2,
        Identity::Trace3,
        Identity::Trace4,
        Identity::BananaDouble,
        Identity::BananaEe,
        Identity::BananaMm,
        Identity::BananaPp,
        Identity::SectionMe,
        Identity::SectionPe,
        Identity::SectionSquare,
        Identity::PhiClosed,
        Identity::Rank3Theta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::VertexOracle => "vertex-oracle",
            Identity::VertexSquares => "vertex-squares",
            Identity::VertexSplitting => "vertex-splitting",
            Identity::VertexNormalization => "vertex-normalization",
            Identity::Trace1 => "trace-1",
            Identity::Trace2 => "trace-2",
            Identity::Trace3 => "trace-3",
            Identity::Trace4 => "trace-4",
            Identity::BananaDouble => "banana-double",
            Identity::BananaEe => "banana-ee",
            Identity::BananaMm => "banana-mm",
            Identity::BananaPp => "banana-pp",
            Identity::SectionMe => "section-me",
            Identity::SectionPe => "section-pe",
            Identity::SectionSquare => "section-square",
            Identity::PhiClosed => "phi-closed",
            Identity::Rank3Theta => "rank3-theta",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| {
            let known: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
            Error::Parse(format!("unknown identity {s:?}; known: {}", known.join(", ")))
        })
    }
}

/// Inputs shared by the checks; each check reads what it needs.
#[derive(Debug, Clone)]
pub struct CheckParams {
    /// Restricts λ-indexed checks to one partition.
    pub lambda: Option<Partition>,
    /// Restricts the vertex oracle to one key.
    pub legs: Option<VertexKey>,
    /// Largest Q-degree compared.
    pub degree: u32,
    /// Last q-exponent compared.
    pub hi: i64,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams { lambda: None, legs: None, degree: 4, hi: 12 }
    }
}

/// A passed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub identity: Identity,
    /// Number of independent cases (keys, partitions or Q-coefficients) compared.
    pub cases: usize,
    pub hi: i64,
}

pub(crate) fn agree(a: &HalfLaurent, b: &HalfLaurent, hi: i64, what: &str) -> Result<()> {
    a.agree_on(b, a.lo().min(b.lo()), hi).map_err(|e| tag(e, what))
}

pub(crate) fn agree_q(a: &QSeries, b: &QSeries, hi: i64, what: &str) -> Result<()> {
    for e in a.exps() {
        agree(a.coeff(e)?, b.coeff(e)?, hi, &format!("{what} Q^{e:?}"))?;
    }
    Ok(())
}

fn tag(e: Error, what: &str) -> Error {
    match e {
        Error::Mismatch(m) => Error::Mismatch(format!("{what}: {m}")),
        other => other,
    }
}

fn lambdas(params: &CheckParams, max: u32) -> Vec<Partition> {
    match &params.lambda {
        Some(l) => vec![l.clone()],
        None => partitions_up_to(max),
    }
}

/// Runs one identity; `Err(Error::Mismatch)` names the first disagreeing coefficient.
pub fn check(identity: Identity, params: &CheckParams) -> Result<Outcome> {
    let hi = params.hi;
    let deg = params.degree;
    let cases = match identity {
        Identity::VertexOracle => {
            let keys = match &params.legs {
                Some(k) => vec![k.clone()],
                None => sums::oracle_keys(),
            };
            sums::check_oracle(&keys, hi)?;
            keys.len()
        }
        Identity::VertexSquares => sums::check_squares(hi)?,
        Identity::VertexSplitting => {
            let ls = lambdas(params, 4);
            sums::check_splitting(&ls, hi)?;
            ls.len()
        }
        Identity::VertexNormalization => {
            let ls = lambdas(params, 3);
            sums::check_normalization(&ls, hi)?;
            ls.len()
        }
        Identity::Trace1 | Identity::Trace2 | Identity::Trace3 | Identity::Trace4 => {
            let n = match identity {
                Identity::Trace1 => 1,
                Identity::Trace2 => 2,
                Identity::Trace3 => 3,
                _ => 4,
            };
            let lhs = trace_sum(n, deg, hi)?;
            agree_q(&lhs, &trace_closed(n, deg, hi)?, hi, identity.name())?;
            deg as usize + 1
        }
        Identity::BananaDouble => {
            let lhs = banana_double_sum(deg, hi)?;
            agree_q(&lhs, &banana_double_closed(deg, hi)?, hi, identity.name())?;
            lhs.exps().len()
        }
        Identity::BananaEe | Identity::BananaMm | Identity::BananaPp | Identity::SectionMe | Identity::SectionPe => {
            use crate::strata::PhiKind;
            let kind = match identity {
                Identity::BananaEe => PhiKind::EE,
                Identity::BananaMm => PhiKind::MM,
                Identity::BananaPp => PhiKind::PP,
                Identity::SectionMe => PhiKind::ME,
                _ => PhiKind::PE,
            };
            sums::check_phi(kind, deg, hi)?;
            deg as usize + 1
        }
        Identity::SectionSquare => {
            let lhs = section_square_sum(deg, hi)?;
            agree_q(&lhs, &section_square_closed(deg, hi), hi, identity.name())?;
            deg as usize + 1
        }
        Identity::PhiClosed => {
            for kind in crate::strata::PhiKind::ALL {
                sums::check_phi(kind, deg, hi)?;
            }
            6 * (deg as usize + 1)
        }
        Identity::Rank3Theta => {
            let lhs = rank3_sum(deg, hi)?;
            let rhs = rank3_product(deg, hi)?;
            let mut n = 0;
            for e in lhs.exps().into_iter().filter(|e| e.iter().sum::<u32>() <= deg) {
                agree(lhs.coeff(e)?, rhs.coeff(e)?, hi, &format!("rank3-theta Q^{e:?}"))?;
                n += 1;
            }
            n
        }
    };
    Ok(Outcome { identity, cases, hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("vertex-nonsense".parse::<Identity>().is_err());
    }

    #[test]
    fn cheap_identities_pass() {
        let p = CheckParams { degree: 2, hi: 8, ..CheckParams::default() };
        for id in [Identity::VertexSquares, Identity::Trace1, Identity::Trace2, Identity::BananaEe, Identity::SectionMe]
        {
            check(id, &p).unwrap();
        }
    }
}
