//! Alternating-matrix constructions attached to a square matrix U: the
//! alternating B solving A·adj(U)ᵀ = U·B, the scalar r and matrix C with
//! B·A′ = r·I + C·U, the combined two-sided identity, trace and uniqueness
//! equations, the right-multiplication variant, and for even sizes the
//! factorizations adj(U) = Y·Z = Y′·Z′.
//!
//! All sums run over strictly increasing index pairs k < l and u < v, as the
//! defining formulas state them; no symmetrization is applied. Minor symbols
//! with an interleaved extra index are evaluated through the alternating
//! sign extension, which is where the sorting sign carries real content.

use std::collections::HashMap;

use serde::Serialize;

use crate::calculus::phi_matrix;
use crate::error::{Error, Result};
use crate::matrix::{generic_matrix, Matrix};
use crate::minor::sort_with_sign;
use crate::poly::Polynomial;
use crate::scalar::{int_mul, Scalar};

/// The data of the two construction theorems for one triple (U, A, A′).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BCRBundle<T: Scalar> {
    pub u: Matrix<T>,
    pub a: Matrix<T>,
    pub a_prime: Matrix<T>,
    pub b: Matrix<T>,
    pub c: Matrix<T>,
    pub r: T,
}

/// Named outcomes of every certified identity, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertificateChecks {
    pub eq_star: bool,
    pub eq_2star: bool,
    pub eq_3star: bool,
    pub bifac: bool,
    #[serde(rename = "trace_B")]
    pub trace_b: bool,
    #[serde(rename = "trace_C")]
    pub trace_c: bool,
    pub uniqueness: bool,
    #[serde(rename = "factor_YZ")]
    pub factor_yz: bool,
    #[serde(rename = "factor_YpZp")]
    pub factor_ypzp: bool,
    #[serde(rename = "det_Y")]
    pub det_y: bool,
    #[serde(rename = "det_Zp")]
    pub det_zp: bool,
}

impl CertificateChecks {
    pub fn all(&self) -> bool {
        self.as_pairs().iter().all(|&(_, ok)| ok)
    }

    /// (name, outcome) pairs in a fixed order.
    pub fn as_pairs(&self) -> [(&'static str, bool); 11] {
        [
            ("eq_star", self.eq_star),
            ("eq_2star", self.eq_2star),
            ("eq_3star", self.eq_3star),
            ("bifac", self.bifac),
            ("trace_B", self.trace_b),
            ("trace_C", self.trace_c),
            ("uniqueness", self.uniqueness),
            ("factor_YZ", self.factor_yz),
            ("factor_YpZp", self.factor_ypzp),
            ("det_Y", self.det_y),
            ("det_Zp", self.det_zp),
        ]
    }
}

/// A bundle together with the even-size factorization of the adjoint and
/// the verdicts of all certified identities. Any false check is a library
/// defect, never a valid data state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationCertificate<T: Scalar> {
    pub bundle: BCRBundle<T>,
    pub y: Matrix<T>,
    pub z: Matrix<T>,
    pub y_prime: Matrix<T>,
    pub z_prime: Matrix<T>,
    pub checks: CertificateChecks,
}

fn require_alternating<T: Scalar>(a: &Matrix<T>, u: &Matrix<T>) -> Result<()> {
    if a.n() != u.n() {
        return Err(Error::DimensionMismatch {
            expected: u.n(),
            found: a.n(),
        });
    }
    if !a.is_alternating() {
        return Err(Error::NotAlternating);
    }
    Ok(())
}

fn apply_sign<T: Scalar>(value: T, negative: bool) -> T {
    if negative {
        -value
    } else {
        value
    }
}

/// The alternating matrix B with entries
/// b_rs = Σ_{k<l} a_kl·(−1)^{k+l+r+s}·[kl |^ rs](U),
/// satisfying A·adj(U)ᵀ = U·B.
pub fn build_b<T: Scalar>(a: &Matrix<T>, u: &Matrix<T>) -> Result<Matrix<T>> {
    require_alternating(a, u)?;
    let n = u.n();
    let mut b: Matrix<T> = Matrix::zero(n);
    for k in 1..=n {
        for l in (k + 1)..=n {
            let a_kl = a.entry(k, l);
            if a_kl.is_zero() {
                continue;
            }
            let table = u.comp_minor_table(&[k - 1, l - 1]);
            for r in 1..=n {
                for s in (r + 1)..=n {
                    let minor = table.get_mask((1 << (r - 1)) | (1 << (s - 1)));
                    if minor.is_zero() {
                        continue;
                    }
                    let term = apply_sign(a_kl.clone() * minor, (k + l + r + s) % 2 != 0);
                    b.set(r, s, b.entry(r, s).clone() + &term);
                    b.set(s, r, b.entry(s, r).clone() - &term);
                }
            }
        }
    }
    Ok(b)
}

/// The scalar r = −Σ_{k<l, u<v} (−1)^{k+l+u+v}·a_kl·[kl |^ uv](U)·a′_uv.
pub fn build_r<T: Scalar>(a: &Matrix<T>, a_prime: &Matrix<T>, u: &Matrix<T>) -> Result<T> {
    require_alternating(a, u)?;
    require_alternating(a_prime, u)?;
    let n = u.n();
    let mut r = T::zero();
    for k in 1..=n {
        for l in (k + 1)..=n {
            let a_kl = a.entry(k, l);
            if a_kl.is_zero() {
                continue;
            }
            let table = u.comp_minor_table(&[k - 1, l - 1]);
            for uu in 1..=n {
                for v in (uu + 1)..=n {
                    let a_uv = a_prime.entry(uu, v);
                    if a_uv.is_zero() {
                        continue;
                    }
                    let minor = table.get_mask((1 << (uu - 1)) | (1 << (v - 1)));
                    if minor.is_zero() {
                        continue;
                    }
                    let term = a_kl.clone() * minor * a_uv;
                    // The leading minus folds into the sign exponent.
                    r += apply_sign(term, (k + l + uu + v) % 2 == 0);
                }
            }
        }
    }
    Ok(r)
}

/// The matrix C with entries
/// c_wm = Σ_{k<l, u<v} (−1)^{k+l+m+u+v+w}·a_kl·[klm |^ uvw](U)·a′_uv
/// at row w, column m, satisfying B·A′ = r·I + C·U.
pub fn build_c<T: Scalar>(a: &Matrix<T>, a_prime: &Matrix<T>, u: &Matrix<T>) -> Result<Matrix<T>> {
    require_alternating(a, u)?;
    require_alternating(a_prime, u)?;
    let n = u.n();
    let mut c: Matrix<T> = Matrix::zero(n);
    // Tables of complementary minors are shared across every (k,l,m) that
    // sorts to the same deleted-row triple.
    let mut tables: HashMap<Vec<usize>, crate::matrix::CompMinorTable<T>> = HashMap::new();
    for k in 1..=n {
        for l in (k + 1)..=n {
            let a_kl = a.entry(k, l);
            if a_kl.is_zero() {
                continue;
            }
            for m in 1..=n {
                if m == k || m == l {
                    continue;
                }
                let (row_sign, sorted_rows) = sort_with_sign(&[k, l, m]);
                let table = tables.entry(sorted_rows.clone()).or_insert_with(|| {
                    let rows0: Vec<usize> = sorted_rows.iter().map(|&x| x - 1).collect();
                    u.comp_minor_table(&rows0)
                });
                for uu in 1..=n {
                    for v in (uu + 1)..=n {
                        let a_uv = a_prime.entry(uu, v);
                        if a_uv.is_zero() {
                            continue;
                        }
                        for w in 1..=n {
                            if w == uu || w == v {
                                continue;
                            }
                            let (col_sign, sorted_cols) = sort_with_sign(&[uu, v, w]);
                            let mask = sorted_cols
                                .iter()
                                .fold(0usize, |acc, &x| acc | (1 << (x - 1)));
                            let minor = table.get_mask(mask);
                            if minor.is_zero() {
                                continue;
                            }
                            let parity_neg = (k + l + m + uu + v + w) % 2 != 0;
                            let sign_neg = (row_sign * col_sign) < 0;
                            let term = a_kl.clone() * minor * a_uv;
                            let term = apply_sign(term, parity_neg != sign_neg);
                            c.set(w, m, c.entry(w, m).clone() + &term);
                        }
                    }
                }
            }
        }
    }
    Ok(c)
}

/// Build the full bundle and certify the two-sided identity
/// A·adj(U)ᵀ·A′ = r·U + U·C·U exactly.
pub fn bifactor_check<T: Scalar>(
    a: &Matrix<T>,
    a_prime: &Matrix<T>,
    u: &Matrix<T>,
) -> Result<BCRBundle<T>> {
    let b = build_b(a, u)?;
    let r = build_r(a, a_prime, u)?;
    let c = build_c(a, a_prime, u)?;
    let bundle = BCRBundle {
        u: u.clone(),
        a: a.clone(),
        a_prime: a_prime.clone(),
        b,
        c,
        r,
    };
    if !bifac_holds(&bundle)? {
        return Err(Error::IdentityFailed("A·adj(U)ᵀ·A′ = rU + UCU"));
    }
    Ok(bundle)
}

/// A·adj(U)ᵀ = U·B, exactly.
pub fn eq_2star_holds<T: Scalar>(bundle: &BCRBundle<T>) -> Result<bool> {
    let lhs = bundle.a.matmul(&bundle.u.adjoint().transpose())?;
    let rhs = bundle.u.matmul(&bundle.b)?;
    Ok(lhs == rhs)
}

/// B·A′ = r·I + C·U, exactly.
pub fn eq_3star_holds<T: Scalar>(bundle: &BCRBundle<T>) -> Result<bool> {
    let lhs = bundle.b.matmul(&bundle.a_prime)?;
    let r_id = Matrix::identity(bundle.u.n()).scalar_mul(&bundle.r);
    let rhs = r_id.matadd(&bundle.c.matmul(&bundle.u)?)?;
    Ok(lhs == rhs)
}

/// A·adj(U)ᵀ·A′ = r·U + U·C·U, exactly.
pub fn bifac_holds<T: Scalar>(bundle: &BCRBundle<T>) -> Result<bool> {
    let lhs = bundle
        .a
        .matmul(&bundle.u.adjoint().transpose())?
        .matmul(&bundle.a_prime)?;
    let r_u = bundle.u.scalar_mul(&bundle.r);
    let rhs = r_u.matadd(&bundle.u.matmul(&bundle.c)?.matmul(&bundle.u)?)?;
    Ok(lhs == rhs)
}

/// tr(B·A′) = 2r and tr(C·U) = (2−n)·r, exactly.
pub fn trace_checks<T: Scalar>(bundle: &BCRBundle<T>) -> Result<bool> {
    let n = bundle.u.n();
    let tr_ba = bundle.b.matmul(&bundle.a_prime)?.trace();
    let tr_cu = bundle.c.matmul(&bundle.u)?.trace();
    Ok(tr_ba == int_mul(2, &bundle.r) && tr_cu == int_mul(2 - n as i64, &bundle.r))
}

/// adj(U)·A·adj(U)ᵀ = det(U)·B. When det(U) is a nonzerodivisor this pins
/// B down as the unique solution of A·adj(U)ᵀ = U·B.
pub fn uniqueness_check<T: Scalar>(a: &Matrix<T>, u: &Matrix<T>) -> Result<bool> {
    let b = build_b(a, u)?;
    let adj = u.adjoint();
    let lhs = adj.matmul(a)?.matmul(&adj.transpose())?;
    let rhs = b.scalar_mul(&u.det());
    Ok(lhs == rhs)
}

/// Given alternating symbolic A, B with A·adj(X)ᵀ = X·B over the generic
/// matrix X, verify the right-sided companion adj(X)ᵀ·φ(A) = φ(B)·X, where
/// φ swaps x_ij and x_ji entrywise.
pub fn right_variant_check(
    a: &Matrix<Polynomial>,
    b: &Matrix<Polynomial>,
    n: usize,
) -> Result<bool> {
    if a.n() != n || b.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if a.n() != n { a.n() } else { b.n() },
        });
    }
    let x = generic_matrix(n)?;
    let adj_t = x.adjoint().transpose();
    let witness_lhs = a.matmul(&adj_t)?;
    let witness_rhs = x.matmul(b)?;
    if witness_lhs != witness_rhs {
        return Err(Error::InvalidWitness);
    }
    let lhs = adj_t.matmul(&phi_matrix(a))?;
    let rhs = phi_matrix(b).matmul(&x)?;
    Ok(lhs == rhs)
}

/// For even n and alternating A, A′ of determinant 1, factor the adjoint:
/// Y = (A′)^{-1}·Uᵀ, Z = (r·I + Cᵀ·Uᵀ)·A^{-1},
/// Y′ = (A′)^{-1}·(r·I + Uᵀ·Cᵀ), Z′ = Uᵀ·A^{-1},
/// with adj(U) = Y·Z = Y′·Z′ and det(Y) = det(Z′) = det(U).
pub fn factor_adjoint<T: Scalar>(
    u: &Matrix<T>,
    a: &Matrix<T>,
    a_prime: &Matrix<T>,
) -> Result<FactorizationCertificate<T>> {
    let n = u.n();
    if n % 2 != 0 {
        return Err(Error::OddSize(n));
    }
    require_alternating(a, u)?;
    require_alternating(a_prime, u)?;
    if a.det() != T::one() || a_prime.det() != T::one() {
        return Err(Error::BadAlternatingDet);
    }

    let bundle = bifactor_check(a, a_prime, u)?;
    let adj = u.adjoint();
    let det = u.det();
    let u_t = u.transpose();
    let c_t = bundle.c.transpose();
    let a_inv = a.inverse()?;
    let a_prime_inv = a_prime.inverse()?;
    let r_id = Matrix::identity(n).scalar_mul(&bundle.r);

    let y = a_prime_inv.matmul(&u_t)?;
    let z = r_id.matadd(&c_t.matmul(&u_t)?)?.matmul(&a_inv)?;
    let y_prime = a_prime_inv.matmul(&r_id.matadd(&u_t.matmul(&c_t)?)?)?;
    let z_prime = u_t.matmul(&a_inv)?;

    let det_id = Matrix::identity(n).scalar_mul(&det);
    let checks = CertificateChecks {
        eq_star: adj.matmul(u)? == det_id && u.matmul(&adj)? == det_id,
        eq_2star: eq_2star_holds(&bundle)?,
        eq_3star: eq_3star_holds(&bundle)?,
        bifac: true,
        trace_b: bundle.b.matmul(&bundle.a_prime)?.trace() == int_mul(2, &bundle.r),
        trace_c: bundle.c.matmul(u)?.trace() == int_mul(2 - n as i64, &bundle.r),
        uniqueness: {
            let lhs = adj.matmul(a)?.matmul(&adj.transpose())?;
            lhs == bundle.b.scalar_mul(&det)
        },
        factor_yz: y.matmul(&z)? == adj,
        factor_ypzp: y_prime.matmul(&z_prime)? == adj,
        det_y: y.det() == det,
        det_zp: z_prime.det() == det,
    };

    Ok(FactorizationCertificate {
        bundle,
        y,
        z,
        y_prime,
        z_prime,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::hyperbolic;
    use crate::poly::parse_polynomial;
    use crate::Int;
    use num_traits::{One, Zero};

    fn int_matrix(rows: &[&[i64]]) -> Matrix<Int> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    /// Alternating matrix with a at (1,2) and b at (3,4) style pairs.
    fn alternating_pairs(n: usize, pairs: &[(usize, usize, i64)]) -> Matrix<Int> {
        let mut m = Matrix::zero(n);
        for &(i, j, v) in pairs {
            m.set(i, j, Int::from(v));
            m.set(j, i, Int::from(-v));
        }
        m
    }

    #[test]
    fn b_equals_a_for_size_two() {
        // The only complementary minor is the empty one with value 1, so
        // b_12 = a_12 whatever U is.
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        for a_val in [-2i64, -1, 1, 3] {
            let a = alternating_pairs(2, &[(1, 2, a_val)]);
            assert_eq!(build_b(&a, &u).unwrap(), a);
        }
    }

    #[test]
    fn b_vanishes_with_a() {
        let u = int_matrix(&[&[5, 1, 2], &[0, 3, 7], &[4, 4, 1]]);
        let zero = Matrix::<Int>::zero(3);
        assert_eq!(build_b(&zero, &u).unwrap(), zero);
    }

    #[test]
    fn b_is_alternating_and_solves_eq_2star_symbolically() {
        let x = generic_matrix(3).unwrap();
        let mut a = Matrix::<Polynomial>::zero(3);
        a.set(1, 2, Polynomial::one());
        a.set(2, 1, -Polynomial::one());
        let b = build_b(&a, &x).unwrap();
        assert!(b.is_alternating());
        let lhs = a.matmul(&x.adjoint().transpose()).unwrap();
        let rhs = x.matmul(&b).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn build_b_rejects_non_alternating() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        let bad = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(build_b(&bad, &u), Err(Error::NotAlternating));
        let small = alternating_pairs(3, &[(1, 2, 1)]);
        assert_eq!(
            build_b(&small, &u),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn r_frozen_values() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        let h = alternating_pairs(2, &[(1, 2, 1)]);
        assert_eq!(build_r(&h, &h, &u).unwrap(), Int::from(-1));

        // r = −ab for symbolic a, b, instantiated over the sweep grid.
        for a_val in [-2i64, -1, 1, 3] {
            for b_val in [-2i64, -1, 1, 3] {
                let a = alternating_pairs(2, &[(1, 2, a_val)]);
                let b = alternating_pairs(2, &[(1, 2, b_val)]);
                assert_eq!(build_r(&a, &b, &u).unwrap(), Int::from(-a_val * b_val));
            }
        }

        let zero = Matrix::<Int>::zero(2);
        assert_eq!(build_r(&zero, &h, &u).unwrap(), Int::zero());
    }

    #[test]
    fn c_is_zero_for_size_two() {
        for entries in [[1i64, 2, 3, 4], [7, 0, -2, 5]] {
            let u = int_matrix(&[&entries[0..2], &entries[2..4]]);
            let a = alternating_pairs(2, &[(1, 2, 3)]);
            let b = alternating_pairs(2, &[(1, 2, -2)]);
            assert_eq!(build_c(&a, &b, &u).unwrap(), Matrix::zero(2));
        }
    }

    #[test]
    fn eq_3star_symbolic_size_three() {
        let x = generic_matrix(3).unwrap();
        let mut a = Matrix::<Polynomial>::zero(3);
        a.set(1, 2, Polynomial::one());
        a.set(2, 1, -Polynomial::one());
        let mut ap = Matrix::<Polynomial>::zero(3);
        ap.set(2, 3, Polynomial::one());
        ap.set(3, 2, -Polynomial::one());

        let bundle = bifactor_check(&a, &ap, &x).unwrap();
        assert!(eq_2star_holds(&bundle).unwrap());
        assert!(eq_3star_holds(&bundle).unwrap());
        assert!(bifac_holds(&bundle).unwrap());
        assert!(trace_checks(&bundle).unwrap());
    }

    #[test]
    fn bifac_numeric_frozen_case() {
        // A = A′ = hyperbolic(1), U = [[1,2],[3,4]]: the two-sided identity
        // collapses to (−1)·U since C = 0.
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        let h: Matrix<Int> = hyperbolic(1).unwrap();
        let bundle = bifactor_check(&h, &h, &u).unwrap();
        assert_eq!(bundle.r, Int::from(-1));
        assert_eq!(bundle.b, h);
        assert_eq!(bundle.c, Matrix::zero(2));
        let lhs = h
            .matmul(&u.adjoint().transpose())
            .unwrap()
            .matmul(&h)
            .unwrap();
        assert_eq!(lhs, u.neg());
        assert!(trace_checks(&bundle).unwrap());
    }

    #[test]
    fn bifac_with_identity_u() {
        let i3 = Matrix::<Int>::identity(3);
        let a = alternating_pairs(3, &[(1, 2, 2), (1, 3, -1)]);
        let ap = alternating_pairs(3, &[(2, 3, 5)]);
        let bundle = bifactor_check(&a, &ap, &i3).unwrap();
        // adj(I)ᵀ = I, so A·A′ = r·I + C.
        let lhs = a.matmul(&ap).unwrap();
        let rhs = Matrix::identity(3)
            .scalar_mul(&bundle.r)
            .matadd(&bundle.c)
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn uniqueness_frozen_case() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        let h = alternating_pairs(2, &[(1, 2, 1)]);
        // adj(U)·A·adj(U)ᵀ = [[0,−2],[2,0]] = det(U)·B with B = A.
        let adj = u.adjoint();
        let lhs = adj.matmul(&h).unwrap().matmul(&adj.transpose()).unwrap();
        assert_eq!(lhs, int_matrix(&[&[0, -2], &[2, 0]]));
        assert!(uniqueness_check(&h, &u).unwrap());

        let i2 = Matrix::<Int>::identity(2);
        assert!(uniqueness_check(&h, &i2).unwrap());
        assert!(uniqueness_check(&Matrix::zero(2), &u).unwrap());
    }

    #[test]
    fn right_variant_symbolic() {
        for n in [2usize, 3] {
            let x = generic_matrix(n).unwrap();
            let mut a = Matrix::<Polynomial>::zero(n);
            a.set(1, 2, Polynomial::one());
            a.set(2, 1, -Polynomial::one());
            let b = build_b(&a, &x).unwrap();
            assert!(right_variant_check(&a, &b, n).unwrap());
        }
        // Zero A pairs with zero B.
        let zero = Matrix::<Polynomial>::zero(2);
        assert!(right_variant_check(&zero, &zero, 2).unwrap());
    }

    #[test]
    fn right_variant_rejects_bad_witness() {
        let a = Matrix::<Polynomial>::zero(2);
        let mut b = Matrix::<Polynomial>::zero(2);
        b.set(1, 2, Polynomial::one());
        b.set(2, 1, -Polynomial::one());
        assert_eq!(right_variant_check(&a, &b, 2), Err(Error::InvalidWitness));
    }

    #[test]
    fn factor_adjoint_numeric_frozen_case() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        let h: Matrix<Int> = hyperbolic(1).unwrap();
        let cert = factor_adjoint(&u, &h, &h).unwrap();
        assert_eq!(cert.y, int_matrix(&[&[-2, -4], &[1, 3]]));
        assert_eq!(cert.z, int_matrix(&[&[0, 1], &[-1, 0]]));
        assert_eq!(cert.y_prime, int_matrix(&[&[0, 1], &[-1, 0]]));
        assert_eq!(cert.z_prime, int_matrix(&[&[3, -1], &[4, -2]]));
        assert!(cert.checks.all(), "{:?}", cert.checks);
    }

    #[test]
    fn factor_adjoint_symbolic_size_two() {
        let x = generic_matrix(2).unwrap();
        let h: Matrix<Polynomial> = hyperbolic(1).unwrap();
        let cert = factor_adjoint(&x, &h, &h).unwrap();
        assert!(cert.checks.all(), "{:?}", cert.checks);
        assert_eq!(cert.bundle.r, p("-1"));
        assert_eq!(cert.y.entry(1, 1), &p("-x1_2"));
    }

    #[test]
    fn factor_adjoint_rejects_bad_inputs() {
        let u3 = Matrix::<Int>::identity(3);
        let a3 = alternating_pairs(3, &[(1, 2, 1)]);
        assert_eq!(factor_adjoint(&u3, &a3, &a3), Err(Error::OddSize(3)));

        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        let doubled = alternating_pairs(2, &[(1, 2, 2)]);
        let h = alternating_pairs(2, &[(1, 2, 1)]);
        assert_eq!(
            factor_adjoint(&u, &doubled, &h),
            Err(Error::BadAlternatingDet)
        );
        let not_alt = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(factor_adjoint(&u, &not_alt, &h), Err(Error::NotAlternating));
    }

    #[test]
    fn bilinearity_spot_check() {
        let u = int_matrix(&[&[2, 1, 0], &[1, 1, 5], &[3, 0, 1]]);
        let a1 = alternating_pairs(3, &[(1, 2, 2)]);
        let a2 = alternating_pairs(3, &[(1, 3, -3), (2, 3, 1)]);
        let sum = a1.matadd(&a2).unwrap();
        let b_sum = build_b(&sum, &u).unwrap();
        let b_parts = build_b(&a1, &u)
            .unwrap()
            .matadd(&build_b(&a2, &u).unwrap())
            .unwrap();
        assert_eq!(b_sum, b_parts);

        let ap = alternating_pairs(3, &[(2, 3, 4)]);
        let r_sum = build_r(&sum, &ap, &u).unwrap();
        let r_parts = build_r(&a1, &ap, &u).unwrap() + build_r(&a2, &ap, &u).unwrap();
        assert_eq!(r_sum, r_parts);

        let c_sum = build_c(&sum, &ap, &u).unwrap();
        let c_parts = build_c(&a1, &ap, &u)
            .unwrap()
            .matadd(&build_c(&a2, &ap, &u).unwrap())
            .unwrap();
        assert_eq!(c_sum, c_parts);
    }
}
