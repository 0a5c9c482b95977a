//! JSON forms of matrices, certificates, and reports.
//!
//! Every document carries `schema_version` so consumers can reject formats
//! they do not understand. Matrix entries travel as strings in each ring's
//! text grammar; serialization order is the struct declaration order, so a
//! given value always produces identical bytes.

use serde::{Deserialize, Serialize};

use crate::calculus::DerivationReport;
use crate::descriptor::{DynMatrix, RingDescriptor, RingOps};
use crate::error::{Error, Result};
use crate::factor::{CertificateChecks, FactorizationCertificate};
use crate::matrix::Matrix;
use crate::sample::RNG_NAME;
use crate::verify::SuiteReport;

pub const SCHEMA_VERSION: u32 = 1;

/// A square matrix tagged with its ring, entries rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub ring: RingDescriptor,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_dyn(m: &DynMatrix) -> Self {
        Self {
            ring: m.descriptor(),
            n: m.n(),
            entries: m.entry_strings(),
        }
    }

    pub fn into_dyn(&self) -> Result<DynMatrix> {
        if self.entries.len() != self.n {
            return Err(Error::Parse(format!(
                "matrix says n = {} but has {} rows",
                self.n,
                self.entries.len()
            )));
        }
        DynMatrix::from_entry_strings(&self.ring, &self.entries)
    }

    fn from_typed<T: RingOps>(m: &Matrix<T>, descriptor: &RingDescriptor) -> Self {
        Self {
            ring: *descriptor,
            n: m.n(),
            entries: (1..=m.n())
                .map(|i| (1..=m.n()).map(|j| m.entry(i, j).render_in(descriptor)).collect())
                .collect(),
        }
    }
}

pub fn matrix_to_json(m: &DynMatrix) -> String {
    serde_json::to_string_pretty(&MatrixJson::from_dyn(m)).expect("matrix serialization is total")
}

pub fn matrix_from_json(text: &str) -> Result<DynMatrix> {
    let mj: MatrixJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad matrix JSON: {e}")))?;
    mj.into_dyn()
}

/// Seed and generator provenance recorded next to each document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub ring: RingDescriptor,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<String>,
}

impl Metadata {
    pub fn new(ring: RingDescriptor, n: usize, seed: Option<u64>) -> Self {
        Self {
            ring,
            n,
            seed,
            rng: seed.map(|_| RNG_NAME.to_string()),
        }
    }
}

/// The full factorization with inputs, constructions, and check verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub schema_version: u32,
    pub metadata: Metadata,
    #[serde(rename = "U")]
    pub u: MatrixJson,
    #[serde(rename = "A")]
    pub a: MatrixJson,
    #[serde(rename = "Aprime")]
    pub a_prime: MatrixJson,
    #[serde(rename = "B")]
    pub b: MatrixJson,
    #[serde(rename = "C")]
    pub c: MatrixJson,
    pub r: String,
    #[serde(rename = "Y")]
    pub y: MatrixJson,
    #[serde(rename = "Z")]
    pub z: MatrixJson,
    #[serde(rename = "Yprime")]
    pub y_prime: MatrixJson,
    #[serde(rename = "Zprime")]
    pub z_prime: MatrixJson,
    pub checks: CertificateChecks,
}

pub fn certificate_to_json<T: RingOps>(
    cert: &FactorizationCertificate<T>,
    descriptor: &RingDescriptor,
    seed: Option<u64>,
) -> CertificateJson {
    CertificateJson {
        schema_version: SCHEMA_VERSION,
        metadata: Metadata::new(*descriptor, cert.bundle.u.n(), seed),
        u: MatrixJson::from_typed(&cert.bundle.u, descriptor),
        a: MatrixJson::from_typed(&cert.bundle.a, descriptor),
        a_prime: MatrixJson::from_typed(&cert.bundle.a_prime, descriptor),
        b: MatrixJson::from_typed(&cert.bundle.b, descriptor),
        c: MatrixJson::from_typed(&cert.bundle.c, descriptor),
        r: cert.bundle.r.render_in(descriptor),
        y: MatrixJson::from_typed(&cert.y, descriptor),
        z: MatrixJson::from_typed(&cert.z, descriptor),
        y_prime: MatrixJson::from_typed(&cert.y_prime, descriptor),
        z_prime: MatrixJson::from_typed(&cert.z_prime, descriptor),
        checks: cert.checks,
    }
}

/// Input to the factor command: either a bare matrix document (U alone,
/// hyperbolic witnesses are filled in) or {"U": ..., "A": ..., "Aprime": ...}.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorInputJson {
    #[serde(rename = "U")]
    u: MatrixJson,
    #[serde(rename = "A")]
    a: Option<MatrixJson>,
    #[serde(rename = "Aprime")]
    a_prime: Option<MatrixJson>,
}

pub struct FactorInput {
    pub u: DynMatrix,
    pub a: Option<DynMatrix>,
    pub a_prime: Option<DynMatrix>,
}

pub fn factor_input_from_json(text: &str) -> Result<FactorInput> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    let has_u = value.as_object().is_some_and(|o| o.contains_key("U"));
    if has_u {
        let input: FactorInputJson = serde_json::from_value(value)
            .map_err(|e| Error::Parse(format!("bad factor input: {e}")))?;
        Ok(FactorInput {
            u: input.u.into_dyn()?,
            a: input.a.map(|m| m.into_dyn()).transpose()?,
            a_prime: input.a_prime.map(|m| m.into_dyn()).transpose()?,
        })
    } else {
        let mj: MatrixJson = serde_json::from_value(value)
            .map_err(|e| Error::Parse(format!("bad matrix JSON: {e}")))?;
        Ok(FactorInput {
            u: mj.into_dyn()?,
            a: None,
            a_prime: None,
        })
    }
}

/// Envelope for one verification suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReportJson {
    pub schema_version: u32,
    #[serde(flatten)]
    pub report: SuiteReport,
}

pub fn verify_report_to_json(report: &SuiteReport) -> VerifyReportJson {
    VerifyReportJson {
        schema_version: SCHEMA_VERSION,
        report: report.clone(),
    }
}

/// Envelope for a batch of derivation lemma checks.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReportJson {
    pub schema_version: u32,
    pub n: usize,
    pub max_order: usize,
    pub lemmas: Vec<DerivationReport>,
    pub all_passed: bool,
}

pub fn lemma_report_to_json(n: usize, max_order: usize, lemmas: Vec<DerivationReport>) -> LemmaReportJson {
    let all_passed = lemmas.iter().all(|r| r.all_passed);
    LemmaReportJson {
        schema_version: SCHEMA_VERSION,
        n,
        max_order,
        lemmas,
        all_passed,
    }
}
