//! Per-sequence check reports and their plain and JSON encodings.
//!
//! Plain lines are tab separated:
//!
//! ```text
//! <index>  <UNIQUE|NONUNIQUE>  <first rejection or ->  [key=value ...]
//! ```
//!
//! where the optional witness fields are `u a x b z y v alt`; `b` and `z`
//! are omitted for single-anchor witnesses.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unieuler_core::transposition::TranspositionSite;
use unieuler_core::{apply_transposition, find_proper_site, run, Alphabet, Error, Trail};

use crate::text::{render, ParseMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "UNIQUE")]
    Unique,
    #[serde(rename = "NONUNIQUE")]
    NonUnique,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Unique => "UNIQUE",
            Verdict::NonUnique => "NONUNIQUE",
        }
    }
}

/// A proper transposition found in a non-unique sequence, rendered as text,
/// together with the other trail it produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub u: String,
    pub a: String,
    pub x: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    pub y: String,
    pub v: String,
    pub alternative: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub index: usize,
    pub verdict: Verdict,
    pub first_rejection: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Checks one sequence over an alphabet of size `m` (at least 1).
pub fn check_trail(
    index: usize,
    t: &Trail,
    alphabet: &Alphabet,
    m: usize,
    mode: ParseMode,
    explain: bool,
) -> Result<CheckReport, Error> {
    let v = run(t, m)?;
    let verdict = if v.accepted {
        Verdict::Unique
    } else {
        Verdict::NonUnique
    };
    let witness = match (explain, verdict) {
        (true, Verdict::NonUnique) => {
            let site = find_proper_site(t).expect("rejected sequences have a proper site");
            Some(witness(t, site, alphabet, mode)?)
        }
        _ => None,
    };
    Ok(CheckReport {
        index,
        verdict,
        first_rejection: v.first_rejection,
        witness,
    })
}

fn witness(
    t: &Trail,
    site: TranspositionSite,
    alphabet: &Alphabet,
    mode: ParseMode,
) -> Result<Witness, Error> {
    let seg = site.segments(t)?;
    let r = |s: &[usize]| render(s, alphabet, mode);
    let alt = apply_transposition(t, site)?;
    Ok(Witness {
        u: r(seg.u),
        a: r(&[seg.a]),
        x: r(seg.x),
        b: seg.b.map(|b| r(&[b])),
        z: seg.z.map(r),
        y: r(seg.y),
        v: r(seg.v),
        alternative: r(&alt),
    })
}

impl CheckReport {
    pub fn to_plain(&self) -> String {
        let mut line = format!(
            "{}\t{}\t{}",
            self.index,
            self.verdict.as_str(),
            self.first_rejection
                .map_or_else(|| "-".to_string(), |n| n.to_string())
        );
        if let Some(w) = &self.witness {
            let mut fields = vec![("u", &w.u), ("a", &w.a), ("x", &w.x)];
            if let Some(b) = &w.b {
                fields.push(("b", b));
            }
            if let Some(z) = &w.z {
                fields.push(("z", z));
            }
            fields.extend([("y", &w.y), ("v", &w.v), ("alt", &w.alternative)]);
            for (k, val) in fields {
                line.push('\t');
                line.push_str(k);
                line.push('=');
                line.push_str(val);
            }
        }
        line
    }

    pub fn from_plain(line: &str) -> Result<Self, ReportParseError> {
        let bad = || ReportParseError(line.to_string());
        let mut fields = line.split('\t');
        let index = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
        let verdict = match fields.next() {
            Some("UNIQUE") => Verdict::Unique,
            Some("NONUNIQUE") => Verdict::NonUnique,
            _ => return Err(bad()),
        };
        let first_rejection = match fields.next() {
            Some("-") => None,
            Some(n) => Some(n.parse().map_err(|_| bad())?),
            None => return Err(bad()),
        };
        let mut kv = std::collections::BTreeMap::new();
        for f in fields {
            let (k, v) = f.split_once('=').ok_or_else(bad)?;
            kv.insert(k, v.to_string());
        }
        let witness = if kv.is_empty() {
            None
        } else {
            let mut take = |k: &str| kv.remove(k);
            let w = Witness {
                u: take("u").ok_or_else(bad)?,
                a: take("a").ok_or_else(bad)?,
                x: take("x").ok_or_else(bad)?,
                b: take("b"),
                z: take("z"),
                y: take("y").ok_or_else(bad)?,
                v: take("v").ok_or_else(bad)?,
                alternative: take("alt").ok_or_else(bad)?,
            };
            if !kv.is_empty() {
                return Err(bad());
            }
            Some(w)
        };
        Ok(CheckReport {
            index,
            verdict,
            first_rejection,
            witness,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed report line {0:?}")]
pub struct ReportParseError(pub String);
