//! Deterministic random generators for matrices and polynomials.
//!
//! Every generator is driven by a seeded ChaCha12 stream, so a (seed,
//! descriptor, size, kind) tuple always reproduces the same value byte for
//! byte. Reports record [`RNG_NAME`] next to the seed for that reason.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::descriptor::{DynMatrix, RingDescriptor, RingOps};
use crate::error::{Error, Result};
use crate::matrix::{hyperbolic, Matrix};
use crate::poly::Polynomial;
use crate::scalar::{big_int_mul, int_mul};
use crate::{Int, ModInt, Rat};

/// Name of the PRNG recorded in report metadata.
pub const RNG_NAME: &str = "chacha12";

pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Shape constraint for a sampled matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    General,
    Alternating,
    /// Alternating with determinant exactly one; the size must be even.
    AlternatingDet1,
}

/// A random polynomial with at most `max_terms` terms of degree at most
/// `max_degree`, variables drawn from the `n_vars` by `n_vars` grid.
pub fn random_polynomial(
    rng: &mut ChaCha12Rng,
    n_vars: u16,
    max_terms: usize,
    max_degree: u32,
) -> Polynomial {
    let terms = rng.gen_range(0..=max_terms);
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let coeff: i64 = rng.gen_range(-9..=9);
        let mut term = Polynomial::constant(coeff);
        let degree = rng.gen_range(0..=max_degree);
        for _ in 0..degree {
            let i = rng.gen_range(1..=n_vars);
            let j = rng.gen_range(1..=n_vars);
            term = term * Polynomial::var(i, j);
        }
        p = p + term;
    }
    p
}

/// Sample a matrix over the ring named by `descriptor`, consuming `rng`.
pub fn random_matrix_in<T: RingOps>(
    descriptor: &RingDescriptor,
    n: usize,
    rng: &mut ChaCha12Rng,
    kind: MatrixKind,
) -> Result<Matrix<T>> {
    descriptor.validate()?;
    if n < 1 {
        return Err(Error::InvalidSize { got: n, min: 1 });
    }
    match kind {
        MatrixKind::General => {
            let mut rows = Vec::with_capacity(n);
            for _ in 0..n {
                rows.push((0..n).map(|_| T::sample_in(descriptor, rng)).collect());
            }
            Matrix::from_rows(rows)
        }
        MatrixKind::Alternating => {
            // Sample the strict upper triangle row by row, reflect negated.
            let mut m: Matrix<T> = Matrix::zero(n);
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let v = T::sample_in(descriptor, rng);
                    m.set(j, i, T::zero() - &v);
                    m.set(i, j, v);
                }
            }
            Ok(m)
        }
        MatrixKind::AlternatingDet1 => {
            if n % 2 != 0 {
                return Err(Error::OddSize(n));
            }
            let u = random_alternating_det1_int(n, rng);
            into_ring(&u, descriptor)
        }
    }
}

/// Sample a matrix and tag it with its ring, seeding a fresh stream.
pub fn random_matrix(
    descriptor: &RingDescriptor,
    n: usize,
    seed: u64,
    kind: MatrixKind,
) -> Result<DynMatrix> {
    let mut rng = rng_from_seed(seed);
    match descriptor {
        RingDescriptor::Integer => {
            let m = random_matrix_in::<Int>(descriptor, n, &mut rng, kind)?;
            Int::wrap_matrix(&m, descriptor)
        }
        RingDescriptor::Rational => {
            let m = random_matrix_in::<Rat>(descriptor, n, &mut rng, kind)?;
            Rat::wrap_matrix(&m, descriptor)
        }
        RingDescriptor::ModM { .. } => {
            let m = random_matrix_in::<ModInt>(descriptor, n, &mut rng, kind)?;
            ModInt::wrap_matrix(&m, descriptor)
        }
        RingDescriptor::Poly { .. } => {
            let m = random_matrix_in::<Polynomial>(descriptor, n, &mut rng, kind)?;
            Polynomial::wrap_matrix(&m, descriptor)
        }
    }
}

/// An integer alternating matrix with determinant one: conjugate the
/// hyperbolic block matrix by a random product of unit shears. Shears
/// preserve the determinant, conjugation preserves alternation, and the
/// entries stay below 2^(n+2) in absolute value.
fn random_alternating_det1_int(n: usize, rng: &mut ChaCha12Rng) -> Matrix<Int> {
    let h: Matrix<Int> = hyperbolic(n / 2).expect("even size at least two");
    let mut s: Matrix<Int> = Matrix::identity(n);
    for _ in 0..(n + 2) {
        let i = rng.gen_range(1..=n);
        let mut j = rng.gen_range(1..=n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        for col in 1..=n {
            let bump = int_mul(c, s.entry(j, col));
            let v = s.entry(i, col).clone() + bump;
            s.set(i, col, v);
        }
    }
    let shs = s
        .matmul(&h)
        .and_then(|sh| sh.matmul(&s.transpose()))
        .expect("sizes agree by construction");
    shs
}

/// Push an integer matrix into the described ring entrywise, canonicalizing
/// each image (residues bind to the modulus).
fn into_ring<T: RingOps>(m: &Matrix<Int>, descriptor: &RingDescriptor) -> Result<Matrix<T>> {
    let mut rows = Vec::with_capacity(m.n());
    for i in 1..=m.n() {
        let mut row = Vec::with_capacity(m.n());
        for j in 1..=m.n() {
            let image = big_int_mul(m.entry(i, j), &T::one());
            row.push(image.canonical_in(descriptor)?);
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}
