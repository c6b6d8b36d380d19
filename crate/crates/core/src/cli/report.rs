//! The `bound` report: BCH, HT, non-zero-locator and exhaustive values for one code.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::cyclic::{self, BchBound, CodeSummary, CyclicCode, CyclicError, HtSearch, HtWitness};
use crate::nzl::{self, BoundLimits, NzlCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundRequest {
    pub bch: bool,
    pub ht: bool,
    pub nzl: bool,
    pub oracle: bool,
    pub limits: BoundLimits,
    pub cap: u128,
}

impl Default for BoundRequest {
    fn default() -> Self {
        BoundRequest {
            bch: true,
            ht: true,
            nzl: true,
            oracle: true,
            limits: BoundLimits::default(),
            cap: cyclic::DEFAULT_ORACLE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeInfo {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub summary: CodeSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HtEntry {
    pub value: Option<u64>,
    pub witness: Option<HtWitness>,
    /// The length exceeds the search limit; no value was computed.
    pub capped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NzlEntry {
    pub d_star: u64,
    pub certificate: NzlCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub d: Option<u64>,
    /// Enumeration skipped: too many codewords or no table-backed field.
    pub capped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codeword: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub code: CodeInfo,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bch: Option<BchBound>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ht: Option<HtEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nzl: Option<NzlEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleEntry>,
}

fn ht_entry(code: &CyclicCode, search: HtSearch) -> Result<HtEntry, CliError> {
    match cyclic::ht_bound(code, search) {
        Ok(h) => Ok(HtEntry {
            value: Some(h.value),
            witness: h.witness,
            capped: false,
        }),
        Err(CyclicError::SearchCapExceeded(_)) => Ok(HtEntry {
            value: None,
            witness: None,
            capped: true,
        }),
        Err(e) => Err(e.into()),
    }
}

fn oracle_entry(code: &CyclicCode, cap: u128) -> Result<OracleEntry, CliError> {
    match cyclic::min_distance_oracle(code, cap) {
        Ok(w) => Ok(OracleEntry {
            d: Some(w.d_true),
            capped: false,
            codeword: w.codeword,
            note: None,
        }),
        Err(
            e @ (CyclicError::TooManyCodewords { .. }
            | CyclicError::NoFieldInstance(_)
            | CyclicError::PreconditionViolated(_)),
        ) => Ok(OracleEntry {
            d: None,
            capped: true,
            codeword: None,
            note: Some(e.to_string()),
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn build_report(
    code: &CyclicCode,
    name: Option<String>,
    req: &BoundRequest,
) -> Result<ReportRecord, CliError> {
    let nzl = if req.nzl {
        match nzl::best_bound(code, req.limits) {
            Ok(best) => {
                if !nzl::verify_certificate(code.defining_set(), code.n(), &best.certificate) {
                    return Err(CliError::Internal(
                        "certificate failed independent verification".into(),
                    ));
                }
                Some(NzlEntry {
                    d_star: best.d_star,
                    certificate: best.certificate,
                })
            }
            Err(nzl::NzlError::DegenerateCover) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    Ok(ReportRecord {
        code: CodeInfo {
            name,
            summary: code.summary(),
        },
        bch: req.bch.then(|| cyclic::bch_bound(code)),
        ht: if req.ht {
            Some(ht_entry(code, req.limits.ht)?)
        } else {
            None
        },
        nzl,
        oracle: if req.oracle {
            Some(oracle_entry(code, req.cap)?)
        } else {
            None
        },
    })
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

/// Aligned plain-text rendering.
pub fn render_human(r: &ReportRecord) -> String {
    let s = &r.code.summary;
    let mut out = String::new();
    let title = r.code.name.as_deref().unwrap_or("code");
    writeln!(out, "{title}: q = {}, n = {}, k = {}", s.q, s.n, s.k).unwrap();
    writeln!(out, "  coset reps     {:?}", s.coset_reps).unwrap();
    writeln!(out, "  defining set   {:?}", s.defining_set).unwrap();
    if let Some(b) = &r.bch {
        let w = b
            .witness
            .map(|w| format!("  (b = {}, step = {}, run = {})", w.b, w.m1, w.run))
            .unwrap_or_default();
        writeln!(out, "  BCH            {}{w}", b.value).unwrap();
    }
    if let Some(h) = &r.ht {
        let w = h
            .witness
            .map(|w| {
                format!(
                    "  (b1 = {}, m1 = {}, m2 = {}, d0 = {}, nu = {})",
                    w.b1, w.m1, w.m2, w.d0, w.nu
                )
            })
            .unwrap_or_default();
        let capped = if h.capped {
            "  (skipped: length above limit)"
        } else {
            ""
        };
        writeln!(out, "  HT             {}{w}{capped}", opt(h.value)).unwrap();
    }
    if let Some(z) = &r.nzl {
        let c = &z.certificate;
        writeln!(
            out,
            "  non-zero loc.  {}  ({}; e = {}, w = {}, t = {}, mu = {}, d_l = {})",
            z.d_star,
            c.locator.label(),
            c.e,
            c.w,
            c.t,
            c.mu,
            c.locator.d_l
        )
        .unwrap();
    }
    if let Some(o) = &r.oracle {
        let note = o
            .note
            .as_deref()
            .map(|n| format!("  ({n})"))
            .unwrap_or_default();
        writeln!(out, "  exhaustive d   {}{note}", opt(o.d)).unwrap();
    }
    out
}
