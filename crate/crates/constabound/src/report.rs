//! Structured report documents emitted by the CLI. Serialization is
//! deterministic (fixed field order, sorted lists), so byte-stable golden
//! files work; every document round-trips parse -> serialize identically.

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "constabound/1";

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub schema: String,
    /// Canonical echo of the invocation.
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub analysis: Option<AnalysisSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub code: Option<CodeSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub table: Option<Vec<TableRow>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factor: Option<FactorSection>,
}

impl ReportDocument {
    pub fn new(command: String) -> ReportDocument {
        ReportDocument {
            schema: SCHEMA.to_string(),
            command,
            warnings: Vec::new(),
            analysis: None,
            code: None,
            table: None,
            factor: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<ReportDocument> {
        serde_json::from_str(text)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct AnalysisSection {
    pub q: u64,
    /// Generator in the coefficient text format, monic.
    pub poly: String,
    /// Order of the generator.
    pub n: u64,
    /// Degree of the generator.
    pub tau: u64,
    pub defining_set: Vec<u64>,
    pub stabilizer: StabilizerSection,
    pub med_representations: Vec<MedRepSection>,
    pub bounds: BoundsSection,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct StabilizerSection {
    pub d0: u64,
    pub sigma_f: Vec<u64>,
    pub group_order: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MedRepSection {
    pub d: u64,
    pub classes: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct BoundsSection {
    pub singleton: u64,
    pub arithmetic: u64,
    pub gamma_family: Vec<GammaEntry>,
    pub coincide: bool,
    pub sigma_f_order: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub omega: Option<u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct GammaEntry {
    pub d: u64,
    pub bound: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct CodeSection {
    pub q: u64,
    pub m: u64,
    pub lambda: String,
    pub generator: String,
    pub dimension: u64,
    /// "ok", "zero-code" or "full-space".
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub analysis: Option<AnalysisSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub distance: Option<DistanceSection>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct DistanceSection {
    /// "computed" or "budget-exceeded".
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub distance: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exhaustive: Option<bool>,
    /// Minimum-weight codeword as a length-m coefficient vector.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    /// Codeword evaluations needed, as a decimal string (may exceed u64).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub required_evaluations: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub budget: Option<String>,
    /// Per-bound verdicts when the distance is known.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tightness: Option<Vec<TightnessEntry>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TightnessEntry {
    pub d: u64,
    pub bound: u64,
    pub tight: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TableRow {
    /// Order of the irreducible generator (index of the cyclotomic factor).
    pub n: u64,
    pub singleton: u64,
    pub arithmetic: u64,
    pub coincide: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct FactorSection {
    pub q: u64,
    pub n: u64,
    pub cosets: Vec<CosetSection>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct CosetSection {
    pub rep: u64,
    pub elems: Vec<u64>,
    pub tau: u64,
    pub n_gamma: u64,
    pub equal_difference: bool,
    pub omega: u64,
    pub sigma: Vec<u64>,
    /// Extension degrees over which the minimal polynomial splits into
    /// binomials, one per admissible difference.
    pub binomial_degrees: Vec<u64>,
    /// Minimal polynomial over the base field, coefficient text format.
    pub minimal_polynomial: String,
    pub factorizations: Vec<BinomialFactorization>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct BinomialFactorization {
    /// Extension degree GF(q^t) over which these are the irreducible factors.
    pub t: u64,
    pub d: u64,
    pub binomials: Vec<BinomialSpec>,
}

/// `X^degree - zeta_n^zeta_exponent` in the ambient field.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct BinomialSpec {
    pub degree: u64,
    pub zeta_exponent: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_is_byte_identical() {
        let mut doc = ReportDocument::new("analyze --q 7 --poly 5,0,0,1".into());
        doc.analysis = Some(AnalysisSection {
            q: 7,
            poly: "5,0,0,1".into(),
            n: 9,
            tau: 3,
            defining_set: vec![1, 4, 7],
            stabilizer: StabilizerSection {
                d0: 3,
                sigma_f: vec![3, 9],
                group_order: 3,
            },
            med_representations: vec![MedRepSection {
                d: 3,
                classes: vec![vec![1, 4, 7]],
            }],
            bounds: BoundsSection {
                singleton: 4,
                arithmetic: 2,
                gamma_family: vec![GammaEntry { d: 3, bound: 2 }, GammaEntry { d: 9, bound: 4 }],
                coincide: false,
                sigma_f_order: 3,
                omega: Some(1),
            },
        });
        let first = doc.to_json();
        let parsed = ReportDocument::from_json(&first).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.to_json(), first);
    }
}
