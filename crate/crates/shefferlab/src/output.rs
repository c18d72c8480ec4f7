//! Machine-readable documents for the command-line surface.
//!
//! Rationals are serialized in the canonical `p/q` text form (plain `p`
//! when q = 1) and polynomials as coefficient arrays lowest degree first.
//! JSON documents carry a top-level `"schema_version": "1"` and keep their
//! field order stable, so emitted bytes are reproducible and parse/serialize
//! round-trips are identity.

use serde::{Deserialize, Serialize};

use crate::identities::{IdentityReport, SuiteSummary};
use crate::poly::Poly;
use crate::rat::Rat;

pub const SCHEMA_VERSION: &str = "1";

/// Canonical coefficient array of a polynomial; the zero polynomial is ["0"].
pub fn poly_strings(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(Rat::to_string).collect()
}

pub fn rat_strings(values: &[Rat]) -> Vec<String> {
    values.iter().map(Rat::to_string).collect()
}

/// Family parameters as they appeared on the command line.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct ParamsDoc {
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub a: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
}

/// Output of `expand`: either a polynomial table or a number table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpandDoc {
    pub schema_version: String,
    pub family: String,
    pub params: ParamsDoc,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x_eval: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomials: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub numbers: Option<Vec<String>>,
}

/// One identity instance with both sides and the witness difference.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDoc {
    pub theorem: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    pub a: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub pass: bool,
    pub witness: Vec<String>,
}

impl From<&IdentityReport> for ReportDoc {
    fn from(report: &IdentityReport) -> Self {
        let inst = &report.instance;
        ReportDoc {
            theorem: inst.theorem.tag().to_string(),
            n: inst.n,
            m: inst.m,
            a: rat_strings(&inst.a),
            lambda: inst.lambda.as_ref().map(Rat::to_string),
            s: inst.s,
            lhs: poly_strings(&report.lhs),
            rhs: poly_strings(&report.rhs),
            pass: report.pass,
            witness: poly_strings(&report.witness),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl From<SuiteSummary> for SummaryDoc {
    fn from(s: SuiteSummary) -> Self {
        SummaryDoc {
            total: s.total,
            passed: s.passed,
            failed: s.failed,
        }
    }
}

/// Output of `verify`: the ordered report list plus the summary counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub schema_version: String,
    pub theorems: Vec<String>,
    pub n_max: usize,
    pub preset: String,
    pub reports: Vec<ReportDoc>,
    pub summary: SummaryDoc,
}

impl VerifyDoc {
    pub fn new(
        theorems: Vec<String>,
        n_max: usize,
        preset: String,
        reports: &[IdentityReport],
        summary: SuiteSummary,
    ) -> Self {
        VerifyDoc {
            schema_version: SCHEMA_VERSION.to_string(),
            theorems,
            n_max,
            preset,
            reports: reports.iter().map(ReportDoc::from).collect(),
            summary: summary.into(),
        }
    }
}

/// Pretty JSON with a trailing newline; byte-stable for identical inputs.
pub fn to_json(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents always serialize");
    text.push('\n');
    text
}

/// CSV rows for a polynomial table: `n,c0,...,cn` per polynomial, ragged.
pub fn polynomials_csv(polys: &[Poly]) -> String {
    let mut out = String::new();
    for (n, p) in polys.iter().enumerate() {
        out.push_str(&n.to_string());
        for c in poly_strings(p) {
            out.push(',');
            out.push_str(&c);
        }
        out.push('\n');
    }
    out
}

/// CSV rows for a number table: `n,value` per line.
pub fn numbers_csv(values: &[Rat]) -> String {
    let mut out = String::new();
    for (n, v) in values.iter().enumerate() {
        out.push_str(&format!("{n},{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn poly_serialization_forms() {
        assert_eq!(poly_strings(&Poly::zero()), vec!["0"]);
        let p = Poly::from_coeffs(vec![rat_int(0), rat(-3, 2), rat_int(1)]);
        assert_eq!(poly_strings(&p), vec!["0", "-3/2", "1"]);
    }

    #[test]
    fn csv_layout() {
        let polys = vec![
            Poly::one(),
            Poly::from_coeffs(vec![rat_int(0), rat_int(-1), rat_int(1)]),
        ];
        assert_eq!(polynomials_csv(&polys), "0,1\n1,0,-1,1\n");
        assert_eq!(numbers_csv(&[rat_int(1), rat(-1, 2)]), "0,1\n1,-1/2\n");
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let doc = ExpandDoc {
            schema_version: SCHEMA_VERSION.to_string(),
            family: "falling_factorial".into(),
            params: ParamsDoc::default(),
            n_max: 2,
            x_eval: None,
            polynomials: Some(vec![vec!["1".into()], vec!["0".into(), "1".into()]]),
            numbers: None,
        };
        let text = to_json(&doc);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
        reserialized.push('\n');
        assert_eq!(text, reserialized);
    }
}
