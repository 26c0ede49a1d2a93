use std::collections::BTreeMap;

use serde::Deserialize;

use super::phi::PhiKind;
use crate::error::{Error, Result};

/// Number of banana configurations; banana slots must cover all of them.
pub const BANANA_POINTS: u32 = 12;

/// Every record carries `M(p)^{-2}` through its vertex word, so that together with the
/// fourteen edge functions it produces `M(p)^{24}`.
const VERTEX_DEGREE: i64 = -2;

/// A decomposed space whose pieces are the records naming it.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Part {
    pub name: String,
    pub space: String,
    pub copies: i64,
    pub euler_total: i64,
}

/// Exponents of `Q1, Q2, Q3` in a record's prefactor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Prefactor {
    #[serde(default)]
    pub q1: u32,
    #[serde(default)]
    pub q2: u32,
    #[serde(default)]
    pub q3: u32,
}

/// Word `p^p V000^v000 V100^v100 V110^v110 V111^v111` in the leg-box vertex values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexWord {
    #[serde(default)]
    pub p: i64,
    #[serde(default)]
    pub v000: i64,
    #[serde(default)]
    pub v100: i64,
    #[serde(default)]
    pub v110: i64,
    #[serde(default)]
    pub v111: i64,
}

impl VertexWord {
    pub fn degree(&self) -> i64 {
        self.v000 + self.v100 + self.v110 + self.v111
    }
}

fn one() -> i64 {
    1
}

/// One stratum of the Chow variety with its local data.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumRecord {
    pub label: String,
    pub source: String,
    pub part: String,
    #[serde(default)]
    pub group: Option<String>,
    #[serde(default = "one")]
    pub copies: i64,
    pub euler: i64,
    /// Holomorphic Euler characteristic of the underlying curve, entering as `p^chi`.
    pub chi: i64,
    pub prefactor: Prefactor,
    pub ratio: VertexWord,
    pub sigma: PhiKind,
    pub banana: Vec<(PhiKind, u32)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    class: [u32; 2],
    part: Vec<Part>,
    record: Vec<StratumRecord>,
}

/// A validated strata table for one class `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataTable {
    pub class: [u32; 2],
    pub parts: Vec<Part>,
    pub records: Vec<StratumRecord>,
}

const B00: &str = include_str!("../../data/b00.toml");
const B01: &str = include_str!("../../data/b01.toml");
const B11: &str = include_str!("../../data/b11.toml");

impl StrataTable {
    /// The checked-in table for `(i, j)`; `(1, 0)` is the mirror of `(0, 1)` and shares it.
    pub fn builtin(ij: (u32, u32)) -> Result<Self> {
        let text = match ij {
            (0, 0) => B00,
            (0, 1) | (1, 0) => B01,
            (1, 1) => B11,
            other => return Err(Error::Strata(format!("no table for class {other:?}"))),
        };
        Self::from_toml(text)
    }

    /// Parses and validates a table.
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawTable = toml::from_str(text).map_err(|e| Error::Strata(e.to_string()))?;
        let t = StrataTable { class: raw.class, parts: raw.part, records: raw.record };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let mut names = BTreeMap::new();
        for p in &self.parts {
            if p.copies <= 0 {
                return Err(Error::Strata(format!("part {:?}: copies must be positive", p.name)));
            }
            if names.insert(p.name.as_str(), 0i64).is_some() {
                return Err(Error::Strata(format!("duplicate part {:?}", p.name)));
            }
        }
        if self.records.is_empty() {
            return Err(Error::Strata("table has no records".into()));
        }
        for r in &self.records {
            let bad = |msg: String| Error::Strata(format!("record {:?} (part {:?}): {msg}", r.label, r.part));
            let Some(total) = names.get_mut(r.part.as_str()) else {
                return Err(bad("unknown part".into()));
            };
            if r.copies <= 0 {
                return Err(bad("copies must be positive".into()));
            }
            *total += r.copies * r.euler;
            let slots: u32 = r.banana.iter().map(|(_, m)| *m).sum();
            if slots != BANANA_POINTS {
                return Err(bad(format!("banana multiplicities sum to {slots}, expected {BANANA_POINTS}")));
            }
            if [r.prefactor.q1, r.prefactor.q2] != self.class {
                return Err(bad(format!(
                    "prefactor Q1^{} Q2^{} does not match class {:?}",
                    r.prefactor.q1, r.prefactor.q2, self.class
                )));
            }
            if r.ratio.degree() != VERTEX_DEGREE {
                return Err(bad(format!("vertex word has degree {}, expected {VERTEX_DEGREE}", r.ratio.degree())));
            }
        }
        for p in &self.parts {
            let got = names[p.name.as_str()];
            if got != p.euler_total {
                return Err(Error::Strata(format!(
                    "part {:?}: Euler characteristics sum to {got}, expected {}",
                    p.name, p.euler_total
                )));
            }
        }
        Ok(())
    }

    pub fn part(&self, name: &str) -> Option<&Part> {
        self.parts.iter().find(|p| p.name == name)
    }

    /// Total multiplicity of a record: part copies times record copies.
    pub fn weight(&self, r: &StratumRecord) -> i64 {
        self.part(&r.part).map_or(0, |p| p.copies) * r.copies
    }

    /// Human-readable listing of the table.
    pub fn to_text(&self) -> String {
        let mut out = format!("class ({}, {})\n", self.class[0], self.class[1]);
        for p in &self.parts {
            out += &format!("part {} x{} e={} : {}\n", p.name, p.copies, p.euler_total, p.space);
            for r in self.records.iter().filter(|r| r.part == p.name) {
                let banana: Vec<String> = r.banana.iter().map(|(k, m)| format!("{k}^{m}")).collect();
                out += &format!(
                    "  {:<24} x{:<2} e={:<5} chi={:<3} Q3^{} sigma={:<4} banana={} ; {}\n",
                    r.label,
                    r.copies,
                    r.euler,
                    r.chi,
                    r.prefactor.q3,
                    r.sigma,
                    banana.join(","),
                    r.source
                );
            }
        }
        out
    }
}
