use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::fit::{psi_basis_fit, psi_combination};
use crate::error::{Error, Result};
use crate::series::{rat, QExp, QSeries};

/// One nonzero invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GVRow {
    pub beta: QExp,
    pub genus: u32,
    pub n: i64,
}

/// Unweighted Gopakumar-Vafa invariants by class and genus; zero entries are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GVTable {
    pub entries: BTreeMap<QExp, BTreeMap<u32, i64>>,
}

impl GVTable {
    pub fn get(&self, beta: QExp, genus: u32) -> i64 {
        self.entries.get(&beta).and_then(|m| m.get(&genus)).copied().unwrap_or(0)
    }

    /// Genus map of a class; empty when every invariant vanishes.
    pub fn class(&self, beta: QExp) -> BTreeMap<u32, i64> {
        self.entries.get(&beta).cloned().unwrap_or_default()
    }

    pub fn rows(&self) -> Vec<GVRow> {
        self.entries
            .iter()
            .flat_map(|(&beta, gs)| gs.iter().map(move |(&genus, &n)| GVRow { beta, genus, n }))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.rows()).expect("rows serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rows: Vec<GVRow> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = GVTable::default();
        for r in rows {
            if r.n == 0 {
                return Err(Error::Parse(format!("zero row for {:?} genus {}", r.beta, r.genus)));
            }
            if t.entries.entry(r.beta).or_default().insert(r.genus, r.n).is_some() {
                return Err(Error::Parse(format!("duplicate row for {:?} genus {}", r.beta, r.genus)));
            }
        }
        Ok(t)
    }

    /// `sum_beta sum_g sum_m (-1)^{|beta|} n^g_beta psi_g(p^m) (-Q)^{m beta} / m` within `caps`,
    /// exact through `hi`.
    pub fn rebuild(&self, caps: QExp, hi: i64) -> Result<QSeries> {
        let mut f = QSeries::zero(caps, hi);
        for (&beta, gs) in &self.entries {
            let ns = gs.iter().map(|(&g, &n)| (g, rat(n))).collect();
            for m in 1.. {
                let e = scale(beta, m);
                if (0..4).any(|v| e[v] > caps[v]) {
                    break;
                }
                let term = psi_combination(&ns, m as i64, hi).scale(&cover_weight(beta, m));
                let sum = f.coeff(e)?.add(&term);
                f.set_coeff(e, sum)?;
            }
        }
        Ok(f)
    }
}

fn scale(beta: QExp, m: u32) -> QExp {
    beta.map(|x| x * m)
}

fn degree(beta: QExp) -> u32 {
    beta.iter().sum()
}

/// `(-1)^{(m + 1) |beta|} / m`: the weight of `n_beta psi_g(p^m)` at `Q^{m beta}`.
fn cover_weight(beta: QExp, m: u32) -> crate::series::Rat {
    let sign = if ((m + 1) * degree(beta)).is_multiple_of(2) { 1 } else { -1 };
    crate::series::Rat::new(sign.into(), (m as i64).into())
}

/// Extracts invariants from a connected series, lowest total degree first.
pub fn gv_invariants(f: &QSeries) -> Result<GVTable> {
    let hi = f.window().1;
    let mut classes: Vec<QExp> = f.exps().into_iter().filter(|e| degree(*e) > 0).collect();
    classes.sort_by_key(|e| (degree(*e), *e));
    let mut table = GVTable::default();
    for beta in classes {
        let mut rest = f.coeff(beta)?.clone();
        let d = beta.iter().copied().filter(|&x| x > 0).fold(0, gcd);
        for m in (2..=d).filter(|m| d % m == 0) {
            let base = beta.map(|x| x / m);
            if let Some(gs) = table.entries.get(&base) {
                let ns = gs.iter().map(|(&g, &n)| (g, rat(n))).collect();
                rest = rest.sub(&psi_combination(&ns, m as i64, hi).scale(&cover_weight(base, m)));
            }
        }
        let fitted = psi_basis_fit(&rest.scale(&(rat(1) / cover_weight(beta, 1))))
            .map_err(|e| Error::NotInPsiSpan(format!("class {beta:?}: {e}")))?;
        let mut gs = BTreeMap::new();
        for (g, n) in fitted {
            let value = (n.is_integer()).then(|| n.to_integer().to_i64()).flatten();
            match value {
                Some(v) => {
                    gs.insert(g, v);
                }
                None => return Err(Error::NonIntegral { beta, genus: g, value: n.to_string() }),
            }
        }
        if !gs.is_empty() {
            table.entries.insert(beta, gs);
        }
    }
    Ok(table)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
