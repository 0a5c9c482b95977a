//! Batch verification of every certified identity over a chosen ring.
//!
//! [`run_suite`] drives one (ring, size) cell: it samples matrices with a
//! seeded stream, checks each identity on its own reseeded block so any
//! single identity reproduces byte for byte from the base seed, and returns
//! a [`SuiteReport`] with per-identity case counts and a first-failure
//! witness when something breaks. Symbolic cells replace the random matrix
//! with the generic one and keep everything else identical.

use num_integer::Integer;
use num_traits::Zero;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::descriptor::{RingDescriptor, RingOps};
use crate::error::{Error, Result};
use crate::factor::{
    bifac_holds, build_b, build_c, build_r, eq_3star_holds, factor_adjoint, uniqueness_check,
    BCRBundle,
};
use crate::matrix::{generic_matrix, hyperbolic, Matrix};
use crate::sample::{random_matrix_in, rng_from_seed, MatrixKind, RNG_NAME};
use crate::scalar::{int_mul, Scalar};
use crate::{Int, ModInt, Rat};

/// Case counts for the identity blocks that are not trial-driven.
const FACTOR_GENERAL_CASES: usize = 20;
const FACTOR_PAIR_CASES: usize = 10;
const UNIQUE_SOLVE_CASES: usize = 50;
const SWEEP: [i64; 4] = [-2, -1, 1, 3];

/// Offset stride between identity blocks; odd, so all offsets are distinct.
const SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

fn block_rng(seed: u64, block: u64) -> ChaCha12Rng {
    rng_from_seed(seed.wrapping_add(block.wrapping_mul(SEED_STRIDE)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Random matrices drawn for the adjugate identities.
    pub trials: usize,
    /// Random alternating draws for each construction identity.
    pub alt_trials: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            trials: 100,
            alt_trials: 20,
            seed: 0,
        }
    }
}

/// Result of checking one identity over many sampled cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl IdentityOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            passed: true,
            first_failure: None,
        }
    }

    fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            if self.first_failure.is_none() {
                self.first_failure = Some(witness());
            }
            self.passed = false;
        }
    }
}

/// Everything one suite run produced, ready for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub ring: RingDescriptor,
    pub n: usize,
    pub symbolic: bool,
    pub trials: usize,
    pub seed: u64,
    pub rng: &'static str,
    pub identities: Vec<IdentityOutcome>,
    pub all_passed: bool,
}

impl SuiteReport {
    fn push(&mut self, outcome: IdentityOutcome) {
        self.all_passed = self.all_passed && outcome.passed;
        self.identities.push(outcome);
    }
}

/// Run the full identity suite for one ring and size.
pub fn run_suite(descriptor: &RingDescriptor, n: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    descriptor.validate()?;
    if n < 1 {
        return Err(Error::InvalidSize { got: n, min: 1 });
    }
    match descriptor {
        RingDescriptor::Integer => {
            let draw = |rng: &mut ChaCha12Rng| {
                random_matrix_in::<Int>(descriptor, n, rng, MatrixKind::General)
            };
            let mut report = suite_over(descriptor, n, opts, false, opts.trials, &draw)?;
            report.push(unique_solve_outcome(n, opts)?);
            Ok(report)
        }
        RingDescriptor::Rational => {
            let draw = |rng: &mut ChaCha12Rng| {
                random_matrix_in::<Rat>(descriptor, n, rng, MatrixKind::General)
            };
            suite_over(descriptor, n, opts, false, opts.trials, &draw)
        }
        RingDescriptor::ModM { .. } => {
            let draw = |rng: &mut ChaCha12Rng| {
                random_matrix_in::<ModInt>(descriptor, n, rng, MatrixKind::General)
            };
            suite_over(descriptor, n, opts, false, opts.trials, &draw)
        }
        RingDescriptor::Poly { n_vars } => {
            if *n_vars != n {
                return Err(Error::Parse(format!(
                    "symbolic verification at size {n} needs n_vars = {n}, got {n_vars}"
                )));
            }
            let x = generic_matrix(n)?;
            let draw = move |_rng: &mut ChaCha12Rng| Ok(x.clone());
            suite_over(descriptor, n, opts, true, 1, &draw)
        }
    }
}

type Draw<'a, T> = &'a dyn Fn(&mut ChaCha12Rng) -> Result<Matrix<T>>;

fn suite_over<T: RingOps>(
    descriptor: &RingDescriptor,
    n: usize,
    opts: &SuiteOptions,
    symbolic: bool,
    star_trials: usize,
    draw_u: Draw<'_, T>,
) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        ring: *descriptor,
        n,
        symbolic,
        trials: opts.trials,
        seed: opts.seed,
        rng: RNG_NAME,
        identities: Vec::new(),
        all_passed: true,
    };

    // adj(U)·U = det(U)·I = U·adj(U).
    let mut out = IdentityOutcome::new("eq_star");
    let mut rng = block_rng(opts.seed, 1);
    for t in 0..star_trials {
        let u = draw_u(&mut rng)?;
        let adj = u.adjoint();
        let det_i = Matrix::from_fn(n, |i, j| if i == j { u.det() } else { T::zero() });
        let ok = adj.matmul(&u)? == det_i && u.matmul(&adj)? == det_i;
        out.case(ok, || format!("trial {t}: U = {u}"));
    }
    report.push(out);

    // adj(Uᵀ) = adj(U)ᵀ.
    let mut out = IdentityOutcome::new("adj_transpose");
    let mut rng = block_rng(opts.seed, 2);
    for t in 0..star_trials {
        let u = draw_u(&mut rng)?;
        let ok = u.transpose().adjoint() == u.adjoint().transpose();
        out.case(ok, || format!("trial {t}: U = {u}"));
    }
    report.push(out);

    // A·adj(U)ᵀ = U·B over the alternating basis, fresh U per basis element.
    let mut out = IdentityOutcome::new("eq_2star_basis");
    let mut rng = block_rng(opts.seed, 3);
    for k in 1..=n {
        for l in (k + 1)..=n {
            let a = basis_alternating::<T>(n, k, l);
            let u = draw_u(&mut rng)?;
            let ok = eq_2star_direct(&a, &u)?;
            out.case(ok, || format!("basis (k, l) = ({k}, {l}), U = {u}"));
        }
    }
    report.push(out);

    // The same identity over random alternating A.
    let mut out = IdentityOutcome::new("eq_2star_random");
    let mut rng = block_rng(opts.seed, 4);
    for t in 0..opts.alt_trials {
        let a = random_matrix_in::<T>(descriptor, n, &mut rng, MatrixKind::Alternating)?;
        let u = draw_u(&mut rng)?;
        let ok = eq_2star_direct(&a, &u)?;
        out.case(ok, || format!("trial {t}: A = {a}, U = {u}"));
    }
    report.push(out);

    // B, r, and C are additive in each alternating argument.
    let mut out = IdentityOutcome::new("bilinearity");
    let mut rng = block_rng(opts.seed, 5);
    for t in 0..opts.alt_trials {
        let a1 = random_matrix_in::<T>(descriptor, n, &mut rng, MatrixKind::Alternating)?;
        let a2 = random_matrix_in::<T>(descriptor, n, &mut rng, MatrixKind::Alternating)?;
        let p1 = random_matrix_in::<T>(descriptor, n, &mut rng, MatrixKind::Alternating)?;
        let p2 = random_matrix_in::<T>(descriptor, n, &mut rng, MatrixKind::Alternating)?;
        let u = draw_u(&mut rng)?;
        let a_sum = a1.matadd(&a2)?;
        let p_sum = p1.matadd(&p2)?;
        let b_ok = build_b(&a_sum, &u)? == build_b(&a1, &u)?.matadd(&build_b(&a2, &u)?)?;
        let r_left =
            build_r(&a_sum, &p1, &u)? == build_r(&a1, &p1, &u)? + build_r(&a2, &p1, &u)?;
        let r_right =
            build_r(&a1, &p_sum, &u)? == build_r(&a1, &p1, &u)? + build_r(&a1, &p2, &u)?;
        let c_ok =
            build_c(&a_sum, &p1, &u)? == build_c(&a1, &p1, &u)?.matadd(&build_c(&a2, &p1, &u)?)?;
        out.case(b_ok && r_left && r_right && c_ok, || {
            format!("trial {t}: U = {u}")
        });
    }
    report.push(out);

    // B·A′ = r·I + C·U.
    let mut out = IdentityOutcome::new("eq_3star");
    let mut rng = block_rng(opts.seed, 6);
    for t in 0..opts.alt_trials {
        let bundle = random_bundle(descriptor, n, &mut rng, draw_u)?;
        out.case(eq_3star_holds(&bundle)?, || {
            format!("trial {t}: U = {}", bundle.u)
        });
    }
    report.push(out);

    // A·adj(U)ᵀ·A′ = r·U + U·C·U.
    let mut out = IdentityOutcome::new("bifac");
    let mut rng = block_rng(opts.seed, 7);
    for t in 0..opts.alt_trials {
        let bundle = random_bundle(descriptor, n, &mut rng, draw_u)?;
        out.case(bifac_holds(&bundle)?, || {
            format!("trial {t}: U = {}", bundle.u)
        });
    }
    report.push(out);

    // tr(B·A′) = 2r.
    let mut out = IdentityOutcome::new("trace_B");
    let mut rng = block_rng(opts.seed, 8);
    for t in 0..opts.alt_trials {
        let bundle = random_bundle(descriptor, n, &mut rng, draw_u)?;
        let ok = bundle.b.matmul(&bundle.a_prime)?.trace() == int_mul(2, &bundle.r);
        out.case(ok, || format!("trial {t}: U = {}", bundle.u));
    }
    report.push(out);

    // tr(C·U) = (2 − n)·r.
    let mut out = IdentityOutcome::new("trace_C");
    let mut rng = block_rng(opts.seed, 9);
    for t in 0..opts.alt_trials {
        let bundle = random_bundle(descriptor, n, &mut rng, draw_u)?;
        let ok = bundle.c.matmul(&bundle.u)?.trace() == int_mul(2 - n as i64, &bundle.r);
        out.case(ok, || format!("trial {t}: U = {}", bundle.u));
    }
    report.push(out);

    // adj(U)·A·adj(U)ᵀ = det(U)·B.
    let mut out = IdentityOutcome::new("uniqueness");
    let mut rng = block_rng(opts.seed, 10);
    for t in 0..opts.alt_trials {
        let a = random_matrix_in::<T>(descriptor, n, &mut rng, MatrixKind::Alternating)?;
        let u = draw_u(&mut rng)?;
        out.case(uniqueness_check(&a, &u)?, || {
            format!("trial {t}: A = {a}, U = {u}")
        });
    }
    report.push(out);

    // Even sizes admit the full factorization with unimodular witnesses.
    if n % 2 == 0 {
        let mut out = IdentityOutcome::new("factor_certificate");
        let mut rng = block_rng(opts.seed, 12);
        let h: Matrix<T> = hyperbolic(n / 2)?;
        let general_cases = if symbolic { 1 } else { FACTOR_GENERAL_CASES };
        for t in 0..general_cases {
            let u = draw_u(&mut rng)?;
            factor_case(&mut out, &u, &h, &h, t);
        }
        for t in 0..FACTOR_PAIR_CASES {
            let a = random_matrix_in::<T>(descriptor, n, &mut rng, MatrixKind::AlternatingDet1)?;
            let a_prime =
                random_matrix_in::<T>(descriptor, n, &mut rng, MatrixKind::AlternatingDet1)?;
            let u = draw_u(&mut rng)?;
            factor_case(&mut out, &u, &a, &a_prime, general_cases + t);
        }
        report.push(out);
    }

    // Size two degenerates: C vanishes and the certificate is −ab·U.
    if n == 2 {
        let mut out = IdentityOutcome::new("n2_degenerate");
        let mut rng = block_rng(opts.seed, 13);
        let j: Matrix<T> = hyperbolic(1)?;
        for a_c in SWEEP {
            for b_c in SWEEP {
                let a = j.map(|x| int_mul(a_c, x));
                let a_prime = j.map(|x| int_mul(b_c, x));
                let u = draw_u(&mut rng)?;
                let c = build_c(&a, &a_prime, &u)?;
                let r = build_r(&a, &a_prime, &u)?;
                let lhs = a.matmul(&u.adjoint().transpose())?.matmul(&a_prime)?;
                let rhs = u.map(|x| int_mul(-(a_c * b_c), x));
                let ok = c.is_zero_matrix()
                    && lhs == rhs
                    && r == int_mul(-(a_c * b_c), &T::one());
                out.case(ok, || format!("(a, b) = ({a_c}, {b_c}), U = {u}"));
            }
        }
        report.push(out);
    }

    Ok(report)
}

fn basis_alternating<T: Scalar>(n: usize, k: usize, l: usize) -> Matrix<T> {
    Matrix::from_fn(n, |i, j| {
        if (i, j) == (k, l) {
            T::one()
        } else if (i, j) == (l, k) {
            -T::one()
        } else {
            T::zero()
        }
    })
}

fn eq_2star_direct<T: Scalar>(a: &Matrix<T>, u: &Matrix<T>) -> Result<bool> {
    let b = build_b(a, u)?;
    Ok(a.matmul(&u.adjoint().transpose())? == u.matmul(&b)?)
}

fn random_bundle<T: RingOps>(
    descriptor: &RingDescriptor,
    n: usize,
    rng: &mut ChaCha12Rng,
    draw_u: Draw<'_, T>,
) -> Result<BCRBundle<T>> {
    let a = random_matrix_in::<T>(descriptor, n, rng, MatrixKind::Alternating)?;
    let a_prime = random_matrix_in::<T>(descriptor, n, rng, MatrixKind::Alternating)?;
    let u = draw_u(rng)?;
    let b = build_b(&a, &u)?;
    let c = build_c(&a, &a_prime, &u)?;
    let r = build_r(&a, &a_prime, &u)?;
    Ok(BCRBundle {
        u,
        a,
        a_prime,
        b,
        c,
        r,
    })
}

fn factor_case<T: Scalar>(
    out: &mut IdentityOutcome,
    u: &Matrix<T>,
    a: &Matrix<T>,
    a_prime: &Matrix<T>,
    trial: usize,
) {
    match factor_adjoint(u, a, a_prime) {
        Ok(cert) => out.case(cert.checks.all(), || {
            let failed: Vec<&str> = cert
                .checks
                .as_pairs()
                .iter()
                .filter(|&&(_, ok)| !ok)
                .map(|&(name, _)| name)
                .collect();
            format!("trial {trial}: failed {}, U = {u}", failed.join(", "))
        }),
        Err(e) => out.case(false, || format!("trial {trial}: error: {e}, U = {u}")),
    }
}

/// Over the integers, solve det(U)·B̃ = adj(U)·A·adj(U)ᵀ entrywise by exact
/// division and confirm the solution is the constructed B. With det(U) a
/// nonzerodivisor this is an independent derivation of B.
fn unique_solve_outcome(n: usize, opts: &SuiteOptions) -> Result<IdentityOutcome> {
    let descriptor = RingDescriptor::Integer;
    let mut out = IdentityOutcome::new("unique_solve");
    let mut rng = block_rng(opts.seed, 11);
    for t in 0..UNIQUE_SOLVE_CASES {
        let mut u = random_matrix_in::<Int>(&descriptor, n, &mut rng, MatrixKind::General)?;
        while u.det().is_zero() {
            u = random_matrix_in::<Int>(&descriptor, n, &mut rng, MatrixKind::General)?;
        }
        let a = random_matrix_in::<Int>(&descriptor, n, &mut rng, MatrixKind::Alternating)?;
        let b = build_b(&a, &u)?;
        let det = u.det();
        let adj = u.adjoint();
        let m = adj.matmul(&a)?.matmul(&adj.transpose())?;
        let mut ok = true;
        for i in 1..=n {
            for j in 1..=n {
                let (q, rem) = m.entry(i, j).div_rem(&det);
                if !rem.is_zero() || q != *b.entry(i, j) {
                    ok = false;
                }
            }
        }
        out.case(ok, || format!("trial {t}: U = {u}, A = {a}"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_opts(seed: u64) -> SuiteOptions {
        SuiteOptions {
            trials: 5,
            alt_trials: 3,
            seed,
        }
    }

    fn names(report: &SuiteReport) -> Vec<&'static str> {
        report.identities.iter().map(|o| o.name).collect()
    }

    #[test]
    fn integer_suite_passes_and_lists_every_block() {
        let report = run_suite(&RingDescriptor::Integer, 2, &small_opts(5)).unwrap();
        assert!(report.all_passed);
        assert_eq!(
            names(&report),
            vec![
                "eq_star",
                "adj_transpose",
                "eq_2star_basis",
                "eq_2star_random",
                "bilinearity",
                "eq_3star",
                "bifac",
                "trace_B",
                "trace_C",
                "uniqueness",
                "factor_certificate",
                "n2_degenerate",
                "unique_solve",
            ]
        );
        let factor = &report.identities[10];
        assert_eq!(factor.cases, FACTOR_GENERAL_CASES + FACTOR_PAIR_CASES);
        let sweep = &report.identities[11];
        assert_eq!(sweep.cases, 16);
    }

    #[test]
    fn odd_size_quotient_suite_skips_even_only_blocks() {
        let d = RingDescriptor::ModM { modulus: 6 };
        let report = run_suite(&d, 3, &small_opts(1)).unwrap();
        assert!(report.all_passed);
        assert!(!names(&report).contains(&"factor_certificate"));
        assert!(!names(&report).contains(&"n2_degenerate"));
        assert!(!names(&report).contains(&"unique_solve"));
        assert_eq!(report.identities[2].cases, 3);
    }

    #[test]
    fn rational_suite_passes() {
        let report = run_suite(&RingDescriptor::Rational, 3, &small_opts(9)).unwrap();
        assert!(report.all_passed);
    }

    #[test]
    fn symbolic_suite_uses_the_generic_matrix() {
        let d = RingDescriptor::Poly { n_vars: 2 };
        let report = run_suite(&d, 2, &small_opts(0)).unwrap();
        assert!(report.all_passed);
        assert!(report.symbolic);
        assert_eq!(report.identities[0].cases, 1);
        let factor = names(&report).iter().position(|&s| s == "factor_certificate");
        assert_eq!(report.identities[factor.unwrap()].cases, 1 + FACTOR_PAIR_CASES);
    }

    #[test]
    fn symbolic_suite_requires_matching_grid() {
        let d = RingDescriptor::Poly { n_vars: 3 };
        assert!(run_suite(&d, 2, &small_opts(0)).is_err());
    }

    #[test]
    fn reports_are_reproducible() {
        let d = RingDescriptor::ModM { modulus: 97 };
        let a = run_suite(&d, 2, &small_opts(77)).unwrap();
        let b = run_suite(&d, 2, &small_opts(77)).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn outcome_records_the_first_failure_only() {
        let mut out = IdentityOutcome::new("probe");
        out.case(true, || unreachable!());
        out.case(false, || "first".to_string());
        out.case(false, || "second".to_string());
        assert_eq!(out.cases, 3);
        assert!(!out.passed);
        assert_eq!(out.first_failure.as_deref(), Some("first"));
    }
}
