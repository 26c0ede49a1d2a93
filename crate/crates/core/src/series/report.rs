//! Windowed JSON views of computed series.
//!
//! A report lists the exact coefficients inside a window `[qmin, qmax]`; it is an output
//! format and is never fed back into arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use serde_json::Value;

use super::laurent::{HalfLaurent, Rat};
use super::qseries::{QExp, QSeries, VAR_NAMES};
use crate::error::{Error, Result};

/// Renders a rational as `num/den` with a positive denominator.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` (or a bare integer) into a reduced rational.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(n, true) || !valid(d, false) {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Coefficients of one Laurent series inside a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentReport {
    pub window: (i64, i64),
    pub q: Vec<(i64, Rat)>,
}

impl LaurentReport {
    /// Views `s` on `[lo, hi]`; fails if `s` is not known up to `hi`.
    pub fn from_series(s: &HalfLaurent, lo: i64, hi: i64) -> Result<Self> {
        s.require(hi)?;
        let q = s.terms().filter(|(e, _)| *e >= lo && *e <= hi).map(|(e, c)| (e, c.clone())).collect();
        Ok(LaurentReport { window: (lo, hi), q })
    }

    fn from_value(window: (i64, i64), v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("\"q\" must be an object".into()))?;
        let mut q = Vec::with_capacity(obj.len());
        for (k, val) in obj {
            let e: i64 = k.parse().map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
            let s = val.as_str().ok_or_else(|| Error::Parse("coefficient must be a string".into()))?;
            let c = rat_from_str(s)?;
            if e < window.0 || e > window.1 {
                return Err(Error::Parse(format!("exponent {e} outside window {window:?}")));
            }
            if !c.is_zero() {
                q.push((e, c));
            }
        }
        q.sort_by_key(|(e, _)| *e);
        if q.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Parse("duplicate exponent".into()));
        }
        Ok(LaurentReport { window, q })
    }

    /// Parses `{"window": [lo, hi], "q": {...}}`.
    pub fn from_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let window = parse_window(v.get("window"))?;
        let q = v.get("q").ok_or_else(|| Error::Parse("missing \"q\"".into()))?;
        Self::from_value(window, q)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Text rendering in p-notation where possible.
    pub fn to_text(&self) -> String {
        if self.q.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .q
            .iter()
            .map(|(e, c)| {
                let var = if e % 2 == 0 { format!("p^{}", e / 2) } else { format!("q^{e}") };
                let c = if c.denom().is_one() { c.numer().to_string() } else { rat_to_string(c) };
                format!("{c}*{var}")
            })
            .collect();
        parts.join(" + ")
    }
}

struct QMap<'a>(&'a [(i64, Rat)]);

impl Serialize for QMap<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = ser.serialize_map(Some(self.0.len()))?;
        for (e, c) in self.0 {
            m.serialize_entry(&e.to_string(), &rat_to_string(c))?;
        }
        m.end()
    }
}

impl Serialize for LaurentReport {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("LaurentReport", 2)?;
        st.serialize_field("window", &[self.window.0, self.window.1])?;
        st.serialize_field("q", &QMap(&self.q))?;
        st.end()
    }
}

/// The JSON series format: nonzero Q-coefficients inside a shared q-window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub window: (i64, i64),
    pub caps: QExp,
    pub terms: Vec<(QExp, Vec<(i64, Rat)>)>,
}

impl SeriesReport {
    /// Views `s` on `[lo, hi]`; fails if some coefficient is not known up to `hi`.
    pub fn from_series(s: &QSeries, lo: i64, hi: i64) -> Result<Self> {
        s.require(hi)?;
        let mut terms = Vec::new();
        for e in s.exps() {
            let c = s.coeff(e)?;
            let q: Vec<(i64, Rat)> =
                c.terms().filter(|(x, _)| *x >= lo && *x <= hi).map(|(x, c)| (x, c.clone())).collect();
            if !q.is_empty() {
                terms.push((e, q));
            }
        }
        Ok(SeriesReport { window: (lo, hi), caps: s.caps(), terms })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let vars = v.get("vars").and_then(|x| x.as_array()).ok_or_else(|| Error::Parse("missing \"vars\"".into()))?;
        if vars.len() != 4 || vars.iter().zip(VAR_NAMES).any(|(a, b)| a.as_str() != Some(b)) {
            return Err(Error::Parse("vars must be [\"Qs\",\"Q1\",\"Q2\",\"Q3\"]".into()));
        }
        let window = parse_window(v.get("window"))?;
        let caps = parse_qexp(v.get("caps"))?;
        let arr = v.get("terms").and_then(|x| x.as_array()).ok_or_else(|| Error::Parse("missing \"terms\"".into()))?;
        let mut seen = BTreeMap::new();
        for t in arr {
            let e = parse_qexp(t.get("Q"))?;
            if (0..4).any(|i| e[i] > caps[i]) {
                return Err(Error::OutsideCaps { exp: e, caps });
            }
            let q = t.get("q").ok_or_else(|| Error::Parse("term missing \"q\"".into()))?;
            let lr = LaurentReport::from_value(window, q)?;
            if seen.insert(e, lr.q).is_some() {
                return Err(Error::Parse(format!("duplicate term {e:?}")));
            }
        }
        let terms = seen.into_iter().filter(|(_, q)| !q.is_empty()).collect();
        Ok(SeriesReport { window, caps, terms })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// The coefficient of `Q^exp` as a Laurent report.
    pub fn coeff(&self, exp: QExp) -> LaurentReport {
        let q = self.terms.iter().find(|(e, _)| *e == exp).map(|(_, q)| q.clone()).unwrap_or_default();
        LaurentReport { window: self.window, q }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, q) in &self.terms {
            let lr = LaurentReport { window: self.window, q: q.clone() };
            out.push_str(&format!("Q{e:?}: {}\n", lr.to_text()));
        }
        if out.is_empty() {
            out.push_str("0\n");
        }
        out
    }
}

impl Serialize for SeriesReport {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a QExp, &'a [(i64, Rat)]);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = ser.serialize_struct("Term", 2)?;
                st.serialize_field("Q", self.0)?;
                st.serialize_field("q", &QMap(self.1))?;
                st.end()
            }
        }
        let terms: Vec<Term> = self.terms.iter().map(|(e, q)| Term(e, q)).collect();
        let mut st = ser.serialize_struct("SeriesReport", 4)?;
        st.serialize_field("vars", &VAR_NAMES)?;
        st.serialize_field("window", &[self.window.0, self.window.1])?;
        st.serialize_field("caps", &self.caps)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

fn parse_window(v: Option<&Value>) -> Result<(i64, i64)> {
    let a = v.and_then(|x| x.as_array()).ok_or_else(|| Error::Parse("missing \"window\"".into()))?;
    match a.as_slice() {
        [lo, hi] => {
            let lo = lo.as_i64().ok_or_else(|| Error::Parse("window bounds must be integers".into()))?;
            let hi = hi.as_i64().ok_or_else(|| Error::Parse("window bounds must be integers".into()))?;
            if lo > hi {
                return Err(Error::Parse(format!("empty window [{lo}, {hi}]")));
            }
            Ok((lo, hi))
        }
        _ => Err(Error::Parse("window must have two entries".into())),
    }
}

fn parse_qexp(v: Option<&Value>) -> Result<QExp> {
    let a = v.and_then(|x| x.as_array()).ok_or_else(|| Error::Parse("expected a 4-vector".into()))?;
    if a.len() != 4 {
        return Err(Error::Parse("expected a 4-vector".into()));
    }
    let mut e = [0u32; 4];
    for (i, x) in a.iter().enumerate() {
        e[i] = x
            .as_u64()
            .and_then(|n| u32::try_from(n).ok())
            .ok_or_else(|| Error::Parse("exponents must be non-negative integers".into()))?;
    }
    Ok(e)
}
