//! Command line front end: verify identity suites, factor adjoints,
//! check the derivation lemmas, and print a guided demo.
//!
//! Exit codes: 0 all checks passed, 1 a mathematical check came out false,
//! 2 usage error, 3 I/O error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use adjfactor::calculus::{check_derdet1, check_derdet2, check_derdet3, check_diffdet, check_phi};
use adjfactor::descriptor::{DynMatrix, RingDescriptor, RingOps};
use adjfactor::factor::{build_c, build_r, factor_adjoint};
use adjfactor::json::{
    certificate_to_json, factor_input_from_json, lemma_report_to_json, verify_report_to_json,
};
use adjfactor::matrix::{generic_matrix, hyperbolic, Matrix};
use adjfactor::sample::{random_matrix, random_matrix_in, rng_from_seed, MatrixKind};
use adjfactor::scalar::{int_mul, Scalar};
use adjfactor::verify::{run_suite, SuiteOptions};
use adjfactor::{Int, Polynomial};

/// Size caps keeping exact arithmetic interactive.
const MAX_NUMERIC_SIZE: usize = 8;
const MAX_SYMBOLIC_SIZE: usize = 5;
const SWEEP: [i64; 4] = [-2, -1, 1, 3];

#[derive(Parser)]
#[command(
    name = "adjfactor",
    version,
    about = "Exact adjugate identities and alternating factorizations over commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the full identity suite over one ring and size.
    Verify(VerifyArgs),
    /// Factor the adjoint of an even-size matrix through alternating witnesses.
    Factor(FactorArgs),
    /// Check the determinant derivation lemmas on the generic matrix.
    Lemmas(LemmaArgs),
    /// Print a deterministic guided tour of the constructions.
    Demo(DemoArgs),
}

#[derive(Args)]
struct RingArgs {
    /// Ring to work over.
    #[arg(long, value_enum)]
    ring: Option<RingKind>,
    /// Modulus for --ring mod (at least 2, composites allowed).
    #[arg(long)]
    modulus: Option<u64>,
    /// Work symbolically on the generic matrix (same as --ring poly).
    #[arg(long)]
    symbolic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingKind {
    Int,
    Rational,
    Mod,
    Poly,
}

impl RingKind {
    fn tag(self) -> &'static str {
        match self {
            Self::Int => "int",
            Self::Rational => "rational",
            Self::Mod => "mod",
            Self::Poly => "poly",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Matrix size.
    #[arg(long)]
    n: usize,
    /// Random matrices drawn per identity block.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Base seed for the deterministic sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FactorArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Matrix size (even). Required unless --input is given.
    #[arg(long)]
    n: Option<usize>,
    /// Seed for sampling U when no input file is given.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON file holding U alone or {"U": ..., "A": ..., "Aprime": ...}.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the JSON certificate here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct LemmaArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Size of the generic matrix.
    #[arg(long)]
    n: usize,
    /// Highest mixed-partial order to check (default: n capped at 3).
    #[arg(long)]
    max_order: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DemoArgs {
    /// Seed for the sampled integer example.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the demo text here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    Io(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl RingArgs {
    /// Combine --ring/--symbolic/--modulus into one descriptor. Symbolic
    /// work puts the generic n by n matrix in play, so poly descriptors
    /// carry n_vars = n.
    fn resolve(&self, n: usize) -> Result<RingDescriptor, CliError> {
        let kind = match (self.ring, self.symbolic) {
            (Some(RingKind::Poly), _) | (None, true) => RingKind::Poly,
            (Some(k), true) => {
                return Err(usage(format!(
                    "--symbolic conflicts with --ring {}",
                    k.tag()
                )))
            }
            (Some(k), false) => k,
            (None, false) => RingKind::Int,
        };
        if kind != RingKind::Mod && self.modulus.is_some() {
            return Err(usage("--modulus only applies to --ring mod"));
        }
        match kind {
            RingKind::Int => Ok(RingDescriptor::Integer),
            RingKind::Rational => Ok(RingDescriptor::Rational),
            RingKind::Poly => Ok(RingDescriptor::Poly { n_vars: n }),
            RingKind::Mod => {
                let modulus = self
                    .modulus
                    .ok_or_else(|| usage("--ring mod requires --modulus"))?;
                if modulus < 2 {
                    return Err(usage("--modulus must be at least 2"));
                }
                Ok(RingDescriptor::ModM { modulus })
            }
        }
    }
}

fn check_size(descriptor: &RingDescriptor, n: usize, needs_even: bool) -> Result<(), CliError> {
    let max = if matches!(descriptor, RingDescriptor::Poly { .. }) {
        MAX_SYMBOLIC_SIZE
    } else {
        MAX_NUMERIC_SIZE
    };
    if n < 1 || n > max {
        return Err(usage(format!(
            "size {n} out of range; this ring supports 1 through {max}"
        )));
    }
    if needs_even && n % 2 != 0 {
        return Err(usage(format!("factorization needs an even size, got {n}")));
    }
    Ok(())
}

fn to_pretty<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("document serialization is total")
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout(), "{text}") {
                Ok(()) => Ok(()),
                // A closed pipe downstream is not our failure.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(CliError::Io(format!("cannot write to stdout: {e}"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("one or more checks failed; see the report");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Factor(args) => cmd_factor(args),
        Command::Lemmas(args) => cmd_lemmas(args),
        Command::Demo(args) => cmd_demo(args),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, CliError> {
    let descriptor = args.ring.resolve(args.n)?;
    check_size(&descriptor, args.n, false)?;
    let opts = SuiteOptions {
        trials: args.trials,
        alt_trials: 20,
        seed: args.seed,
    };
    let report =
        run_suite(&descriptor, args.n, &opts).map_err(|e| usage(e.to_string()))?;
    let passed = report.all_passed;
    emit(&to_pretty(&verify_report_to_json(&report)), &args.output)?;
    Ok(passed)
}

fn cmd_lemmas(args: LemmaArgs) -> Result<bool, CliError> {
    if let Some(kind) = args.ring.ring {
        if kind != RingKind::Poly {
            return Err(usage(format!(
                "the lemmas are statements about the generic matrix; --ring {} does not apply",
                kind.tag()
            )));
        }
    }
    if args.ring.modulus.is_some() {
        return Err(usage("--modulus does not apply to lemmas"));
    }
    let n = args.n;
    if n < 1 || n > MAX_SYMBOLIC_SIZE {
        return Err(usage(format!(
            "size {n} out of range; lemmas support 1 through {MAX_SYMBOLIC_SIZE}"
        )));
    }
    let max_order = args.max_order.unwrap_or_else(|| n.min(3));
    if max_order < 1 || max_order > n {
        return Err(usage(format!(
            "--max-order must be between 1 and {n}, got {max_order}"
        )));
    }
    let x = generic_matrix(n).map_err(|e| usage(e.to_string()))?;
    let mut lemmas = vec![check_diffdet(&x)];
    lemmas.push(check_derdet1(n).map_err(|e| usage(e.to_string()))?);
    lemmas.push(check_derdet2(n).map_err(|e| usage(e.to_string()))?);
    for k in 1..=max_order {
        lemmas.push(check_derdet3(n, k).map_err(|e| usage(e.to_string()))?);
    }
    lemmas.push(check_phi(n).map_err(|e| usage(e.to_string()))?);
    let doc = lemma_report_to_json(n, max_order, lemmas);
    let passed = doc.all_passed;
    emit(&to_pretty(&doc), &args.output)?;
    Ok(passed)
}

fn cmd_factor(args: FactorArgs) -> Result<bool, CliError> {
    let (u, a, a_prime, seed) = load_factor_input(&args)?;
    let descriptor = u.descriptor();
    check_size(&descriptor, u.n(), true)?;
    match u {
        DynMatrix::Integer(u) => {
            let a = take_witness(a, |dm| match dm {
                DynMatrix::Integer(m) => Some(m),
                _ => None,
            })?;
            let a_prime = take_witness(a_prime, |dm| match dm {
                DynMatrix::Integer(m) => Some(m),
                _ => None,
            })?;
            typed_factor(u, a, a_prime, &descriptor, seed, &args.output)
        }
        DynMatrix::Rational(u) => {
            let a = take_witness(a, |dm| match dm {
                DynMatrix::Rational(m) => Some(m),
                _ => None,
            })?;
            let a_prime = take_witness(a_prime, |dm| match dm {
                DynMatrix::Rational(m) => Some(m),
                _ => None,
            })?;
            typed_factor(u, a, a_prime, &descriptor, seed, &args.output)
        }
        DynMatrix::ModM { matrix, modulus } => {
            let want = modulus;
            let a = take_witness(a, |dm| match dm {
                DynMatrix::ModM { matrix, modulus } if modulus == want => Some(matrix),
                _ => None,
            })?;
            let a_prime = take_witness(a_prime, |dm| match dm {
                DynMatrix::ModM { matrix, modulus } if modulus == want => Some(matrix),
                _ => None,
            })?;
            typed_factor(matrix, a, a_prime, &descriptor, seed, &args.output)
        }
        DynMatrix::Poly { matrix, .. } => {
            let a = take_witness(a, |dm| match dm {
                DynMatrix::Poly { matrix, .. } => Some(matrix),
                _ => None,
            })?;
            let a_prime = take_witness(a_prime, |dm| match dm {
                DynMatrix::Poly { matrix, .. } => Some(matrix),
                _ => None,
            })?;
            typed_factor(matrix, a, a_prime, &descriptor, seed, &args.output)
        }
    }
}

fn take_witness<T>(
    witness: Option<DynMatrix>,
    extract: impl Fn(DynMatrix) -> Option<Matrix<T>>,
) -> Result<Option<Matrix<T>>, CliError>
where
    T: Scalar,
{
    match witness {
        None => Ok(None),
        Some(dm) => {
            let shown = dm.descriptor();
            extract(dm).map(Some).ok_or_else(|| {
                usage(format!("witness ring {shown} differs from the ring of U"))
            })
        }
    }
}

fn typed_factor<T: RingOps>(
    u: Matrix<T>,
    a: Option<Matrix<T>>,
    a_prime: Option<Matrix<T>>,
    descriptor: &RingDescriptor,
    seed: Option<u64>,
    output: &Option<PathBuf>,
) -> Result<bool, CliError> {
    let half = u.n() / 2;
    let a = match a {
        Some(m) => m,
        None => hyperbolic(half).map_err(|e| usage(e.to_string()))?,
    };
    let a_prime = match a_prime {
        Some(m) => m,
        None => hyperbolic(half).map_err(|e| usage(e.to_string()))?,
    };
    let cert = factor_adjoint(&u, &a, &a_prime).map_err(|e| usage(e.to_string()))?;
    let passed = cert.checks.all();
    emit(&to_pretty(&certificate_to_json(&cert, descriptor, seed)), output)?;
    Ok(passed)
}

fn load_factor_input(
    args: &FactorArgs,
) -> Result<(DynMatrix, Option<DynMatrix>, Option<DynMatrix>, Option<u64>), CliError> {
    if let Some(path) = &args.input {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        let input = factor_input_from_json(&text).map_err(|e| CliError::Io(e.to_string()))?;
        let descriptor = input.u.descriptor();
        if let Some(kind) = args.ring.ring {
            if kind.tag() != descriptor.kind() {
                return Err(usage(format!(
                    "--ring {} conflicts with the input ring {}",
                    kind.tag(),
                    descriptor.kind()
                )));
            }
        }
        if args.ring.symbolic && descriptor.kind() != "poly" {
            return Err(usage("--symbolic conflicts with the input ring"));
        }
        if let Some(m) = args.ring.modulus {
            if !matches!(descriptor, RingDescriptor::ModM { modulus } if modulus == m) {
                return Err(usage("--modulus conflicts with the input ring"));
            }
        }
        if let Some(n) = args.n {
            if n != input.u.n() {
                return Err(usage(format!(
                    "--n {n} conflicts with the input size {}",
                    input.u.n()
                )));
            }
        }
        Ok((input.u, input.a, input.a_prime, None))
    } else {
        let n = args
            .n
            .ok_or_else(|| usage("--n is required without --input"))?;
        let descriptor = args.ring.resolve(n)?;
        check_size(&descriptor, n, true)?;
        match descriptor {
            RingDescriptor::Poly { .. } => {
                let x = generic_matrix(n).map_err(|e| usage(e.to_string()))?;
                let u = DynMatrix::Poly {
                    n_vars: n,
                    matrix: x,
                };
                Ok((u, None, None, None))
            }
            _ => {
                let u = random_matrix(&descriptor, n, args.seed, MatrixKind::General)
                    .map_err(|e| usage(e.to_string()))?;
                Ok((u, None, None, Some(args.seed)))
            }
        }
    }
}

fn matrix_block<T: Scalar>(m: &Matrix<T>) -> String {
    (1..=m.n())
        .map(|i| {
            let row = m
                .row(i)
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            format!("  [{row}]")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn cmd_demo(args: DemoArgs) -> Result<bool, CliError> {
    let fail = |e: adjfactor::Error| usage(e.to_string());
    let mut out = String::new();
    let mut all_ok = true;

    let _ = writeln!(out, "Constructive factorization of the classical adjoint");
    let _ = writeln!(out, "===================================================");
    let _ = writeln!(out);

    // Size 2: the correction term C vanishes, so the certificate collapses
    // to a scalar multiple of X itself.
    let x = generic_matrix(2).map_err(fail)?;
    let j: Matrix<Polynomial> = hyperbolic(1).map_err(fail)?;
    let mut sweep_ok = true;
    for a_c in SWEEP {
        for b_c in SWEEP {
            let a = j.map(|p| int_mul(a_c, p));
            let a_prime = j.map(|p| int_mul(b_c, p));
            let lhs = a
                .matmul(&x.adjoint().transpose())
                .and_then(|m| m.matmul(&a_prime))
                .map_err(fail)?;
            let rhs = x.map(|p| int_mul(-(a_c * b_c), p));
            let c = build_c(&a, &a_prime, &x).map_err(fail)?;
            let r = build_r(&a, &a_prime, &x).map_err(fail)?;
            sweep_ok = sweep_ok
                && lhs == rhs
                && c.is_zero_matrix()
                && r == Polynomial::constant(-(a_c * b_c));
        }
    }
    let _ = writeln!(
        out,
        "Size 2, symbolic: A = a·J and A′ = b·J over (a, b) in {{-2, -1, 1, 3}}^2,"
    );
    let _ = writeln!(out, "where J is the hyperbolic 2 by 2 block. C = 0 throughout, and");
    if sweep_ok {
        let _ = writeln!(out, "  A·adj(X)ᵀ·A′ = −ab·X verified");
    } else {
        let _ = writeln!(out, "  A·adj(X)ᵀ·A′ = −ab·X FAILED");
        all_ok = false;
    }
    let _ = writeln!(out);

    // Size 4: a full factorization of the adjoint of a random integer matrix.
    let _ = writeln!(out, "Size 4, integer entries, seed {}:", args.seed);
    let descriptor = RingDescriptor::Integer;
    let mut rng = rng_from_seed(args.seed);
    let u = random_matrix_in::<Int>(&descriptor, 4, &mut rng, MatrixKind::General)
        .map_err(fail)?;
    let h: Matrix<Int> = hyperbolic(2).map_err(fail)?;
    let cert = factor_adjoint(&u, &h, &h).map_err(fail)?;
    let _ = writeln!(out, "U =\n{}", matrix_block(&u));
    let _ = writeln!(out, "Y =\n{}", matrix_block(&cert.y));
    let _ = writeln!(out, "Z =\n{}", matrix_block(&cert.z));
    let _ = writeln!(out, "Y′ =\n{}", matrix_block(&cert.y_prime));
    let _ = writeln!(out, "Z′ =\n{}", matrix_block(&cert.z_prime));
    let _ = writeln!(out, "r = {}", cert.bundle.r);
    if cert.checks.all() {
        let _ = writeln!(
            out,
            "adj(U) = Y·Z = Y′·Z′ verified; det(Y) = det(Z′) = det(U) = {}.",
            u.det()
        );
    } else {
        let failed: Vec<&str> = cert
            .checks
            .as_pairs()
            .iter()
            .filter(|&&(_, ok)| !ok)
            .map(|&(name, _)| name)
            .collect();
        let _ = writeln!(out, "FAILED checks: {}.", failed.join(", "));
        all_ok = false;
    }

    emit(out.trim_end(), &args.output)?;
    Ok(all_ok)
}
