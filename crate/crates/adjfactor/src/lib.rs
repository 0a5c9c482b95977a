//! Exact linear algebra over commutative rings: minors, adjugates, and
//! constructive factorizations of the adjoint through alternating matrices.

pub mod calculus;
pub mod descriptor;
pub mod error;
pub mod factor;
pub mod json;
pub mod matrix;
pub mod minor;
pub mod modint;
pub mod poly;
pub mod sample;
pub mod scalar;
pub mod verify;

pub use calculus::{transpose_automorphism, DerivationReport, LemmaId};
pub use descriptor::{DynMatrix, RingDescriptor, RingOps};
pub use error::{Error, Result};
pub use factor::{
    bifactor_check, build_b, build_c, build_r, factor_adjoint, right_variant_check, trace_checks,
    uniqueness_check, BCRBundle, CertificateChecks, FactorizationCertificate,
};
pub use json::{
    certificate_to_json, factor_input_from_json, lemma_report_to_json, matrix_from_json,
    matrix_to_json, verify_report_to_json, CertificateJson, FactorInput, LemmaReportJson,
    MatrixJson, Metadata, VerifyReportJson, SCHEMA_VERSION,
};
pub use matrix::{generic_matrix, hyperbolic, Matrix};
pub use minor::MinorSymbol;
pub use modint::ModInt;
pub use poly::{parse_polynomial, Monomial, Polynomial, Term};
pub use sample::{
    random_matrix, random_matrix_in, random_polynomial, rng_from_seed, MatrixKind, RNG_NAME,
};
pub use scalar::Scalar;
pub use verify::{run_suite, IdentityOutcome, SuiteOptions, SuiteReport};

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational scalar.
pub type Rat = num_rational::BigRational;
