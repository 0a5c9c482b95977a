//! Derivation identities on the generic matrix, run as exhaustive checkers.
//!
//! Each checker enumerates its index tuples in lexicographic order, compares
//! both sides as canonical polynomials, and reports the first failing tuple.
//! The checkers are oracles for the factorization constructions, not trusted
//! rewrites: every case evaluates both sides independently.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{generic_matrix, Matrix};
use crate::poly::Polynomial;

/// Which identity a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaId {
    Diffdet,
    Derdet1,
    Derdet2,
    Derdet3,
    Phi,
}

/// The first counterexample found, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// The failing index tuple, in the order the identity quantifies it.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one exhaustive identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationReport {
    pub n: usize,
    pub lemma: LemmaId,
    pub cases_checked: usize,
    pub all_passed: bool,
    pub first_failure: Option<Failure>,
}

impl DerivationReport {
    fn new(n: usize, lemma: LemmaId) -> Self {
        Self {
            n,
            lemma,
            cases_checked: 0,
            all_passed: true,
            first_failure: None,
        }
    }

    /// Count one case; on the first mismatch record the witness.
    fn case(&mut self, indices: &[usize], lhs: &Polynomial, rhs: &Polynomial) {
        self.cases_checked += 1;
        if self.all_passed && lhs != rhs {
            self.all_passed = false;
            self.first_failure = Some(Failure {
                indices: indices.to_vec(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

/// The transpose automorphism φ with φ(x_ij) = x_ji.
pub fn transpose_automorphism(p: &Polynomial) -> Polynomial {
    p.transpose_vars()
}

/// φ applied to every entry of a matrix.
pub fn phi_matrix(m: &Matrix<Polynomial>) -> Matrix<Polynomial> {
    m.map(|p| p.transpose_vars())
}

/// Extend a derivation from its action on the variables to the whole ring:
/// D(p) = Σ_ij D(x_ij)·∂_ij(p), where `action` holds D(x_ij) at (i, j).
pub fn apply_derivation(p: &Polynomial, action: &Matrix<Polynomial>) -> Polynomial {
    let n = action.n();
    let mut acc = Polynomial::zero();
    for i in 1..=n {
        for j in 1..=n {
            let partial = p.partial(i as u16, j as u16);
            if !partial.is_zero() {
                acc += action.entry(i, j).clone() * partial;
            }
        }
    }
    acc
}

/// Determinant with row i (1-based) replaced by the given entries.
fn det_with_row(u: &Matrix<Polynomial>, i: usize, row: &[Polynomial]) -> Polynomial {
    Matrix::from_fn(u.n(), |a, b| {
        if a == i {
            row[b - 1].clone()
        } else {
            u.entry(a, b).clone()
        }
    })
    .det()
}

/// Determinant with column j (1-based) replaced by the given entries.
fn det_with_col(u: &Matrix<Polynomial>, j: usize, col: &[Polynomial]) -> Polynomial {
    Matrix::from_fn(u.n(), |a, b| {
        if b == j {
            col[a - 1].clone()
        } else {
            u.entry(a, b).clone()
        }
    })
    .det()
}

/// Both row and column expansions of D(det U) for one derivation:
/// D(det U) = Σ_i det(U with row i replaced by its D-image), and the same
/// over columns.
pub fn check_diffdet_for(
    u: &Matrix<Polynomial>,
    action: &Matrix<Polynomial>,
) -> Result<(Polynomial, Polynomial, Polynomial)> {
    if u.n() != action.n() {
        return Err(Error::DimensionMismatch {
            expected: u.n(),
            found: action.n(),
        });
    }
    let n = u.n();
    let d_entries = Matrix::from_fn(n, |i, j| apply_derivation(u.entry(i, j), action));
    let lhs = apply_derivation(&u.det(), action);

    let mut row_sum = Polynomial::zero();
    for i in 1..=n {
        row_sum += det_with_row(u, i, d_entries.row(i));
    }

    let mut col_sum = Polynomial::zero();
    for j in 1..=n {
        let col: Vec<Polynomial> = (1..=n).map(|a| d_entries.entry(a, j).clone()).collect();
        col_sum += det_with_col(u, j, &col);
    }

    Ok((lhs, row_sum, col_sum))
}

/// Row and column expansion of D(det U), for D ranging over the basis
/// partials ∂_kl. Since both sides are linear in the values D(x_kl), passing
/// on the basis verifies the identity for every derivation.
pub fn check_diffdet(u: &Matrix<Polynomial>) -> DerivationReport {
    let n = u.n();
    let mut report = DerivationReport::new(n, LemmaId::Diffdet);
    for k in 1..=n {
        for l in 1..=n {
            let action = Matrix::from_fn(n, |i, j| {
                if (i, j) == (k, l) {
                    Polynomial::constant(1)
                } else {
                    Polynomial::zero()
                }
            });
            let (lhs, row_sum, col_sum) =
                check_diffdet_for(u, &action).expect("sizes match by construction");
            report.case(&[k, l], &lhs, &row_sum);
            report.case(&[k, l], &lhs, &col_sum);
        }
    }
    report
}

/// ∂_ij(det X) equals the (i, j) entry of adj(X)ᵀ, for all i, j.
pub fn check_derdet1(n: usize) -> Result<DerivationReport> {
    let x = generic_matrix(n)?;
    let det = x.det();
    let adj_t = x.adjoint().transpose();
    let mut report = DerivationReport::new(n, LemmaId::Derdet1);
    for i in 1..=n {
        for j in 1..=n {
            let lhs = det.partial(i as u16, j as u16);
            report.case(&[i, j], &lhs, adj_t.entry(i, j));
        }
    }
    Ok(report)
}

/// Σ_ν x_iν·∂_jν(det X) = δ_ij·det X = Σ_ν x_νi·∂_νj(det X), for all i, j.
pub fn check_derdet2(n: usize) -> Result<DerivationReport> {
    let x = generic_matrix(n)?;
    let det = x.det();
    let mut report = DerivationReport::new(n, LemmaId::Derdet2);
    for i in 1..=n {
        for j in 1..=n {
            let expected = if i == j { det.clone() } else { Polynomial::zero() };

            let mut row_sum = Polynomial::zero();
            for nu in 1..=n {
                row_sum += x.entry(i, nu).clone() * det.partial(j as u16, nu as u16);
            }
            report.case(&[i, j], &row_sum, &expected);

            let mut col_sum = Polynomial::zero();
            for nu in 1..=n {
                col_sum += x.entry(nu, i).clone() * det.partial(nu as u16, j as u16);
            }
            report.case(&[i, j], &col_sum, &expected);
        }
    }
    Ok(report)
}

/// Iterated partials of det X against signed complementary minors:
/// ∂_{i₁j₁}···∂_{i_kj_k}(det X) = (−1)^{Σi+Σj}·[i₁…i_k |^ j₁…j_k](X),
/// over every tuple in [1,n]^k × [1,n]^k, repeated and unsorted included.
pub fn check_derdet3(n: usize, k: usize) -> Result<DerivationReport> {
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let x = generic_matrix(n)?;
    let det = x.det();
    let mut report = DerivationReport::new(n, LemmaId::Derdet3);

    // One odometer over (i₁…i_k, j₁…j_k) keeps enumeration lexicographic.
    let mut tuple = vec![1usize; 2 * k];
    loop {
        let (rows, cols) = tuple.split_at(k);

        let mut lhs = det.clone();
        for a in 0..k {
            lhs = lhs.partial(rows[a] as u16, cols[a] as u16);
            if lhs.is_zero() {
                break;
            }
        }

        let index_sum: usize = tuple.iter().sum();
        let minor = x.comp_minor(rows, cols)?;
        let rhs = if index_sum % 2 == 0 { minor } else { -minor };

        report.case(&tuple, &lhs, &rhs);

        // Advance the odometer; digits run over 1..=n.
        let mut pos = 2 * k;
        loop {
            if pos == 0 {
                return Ok(report);
            }
            pos -= 1;
            if tuple[pos] < n {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 1;
        }
    }
}

/// φ is an involution fixing det X, and entrywise it turns adj(X) into
/// adj(X)ᵀ.
pub fn check_phi(n: usize) -> Result<DerivationReport> {
    let x = generic_matrix(n)?;
    let det = x.det();
    let mut report = DerivationReport::new(n, LemmaId::Phi);

    report.case(&[0, 0], &transpose_automorphism(&det), &det);
    report.case(
        &[0, 0],
        &transpose_automorphism(&transpose_automorphism(&det)),
        &det,
    );

    let adj = x.adjoint();
    let adj_t = adj.transpose();
    for i in 1..=n {
        for j in 1..=n {
            report.case(
                &[i, j],
                &transpose_automorphism(adj.entry(i, j)),
                adj_t.entry(i, j),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn diffdet_partial_11_of_two_by_two() {
        let u = generic_matrix(2).unwrap();
        let action = Matrix::from_fn(2, |i, j| {
            if (i, j) == (1, 1) {
                Polynomial::constant(1)
            } else {
                Polynomial::zero()
            }
        });
        let (lhs, rows, cols) = check_diffdet_for(&u, &action).unwrap();
        assert_eq!(lhs, p("x2_2"));
        assert_eq!(rows, p("x2_2"));
        assert_eq!(cols, p("x2_2"));
    }

    #[test]
    fn diffdet_holds_on_nongeneric_entries() {
        // U with polynomial entries, D = ∂_11 + x_11·∂_12.
        let u = Matrix::from_rows(vec![
            vec![p("x1_1^2"), p("x1_2 + x2_1")],
            vec![p("3*x1_1"), p("x2_2*x1_2")],
        ])
        .unwrap();
        let action = Matrix::from_rows(vec![
            vec![p("1"), p("x1_1")],
            vec![p("0"), p("0")],
        ])
        .unwrap();
        let (lhs, rows, cols) = check_diffdet_for(&u, &action).unwrap();
        assert_eq!(lhs, rows);
        assert_eq!(lhs, cols);
    }

    #[test]
    fn diffdet_size_one_is_trivial() {
        let u = generic_matrix(1).unwrap();
        let report = check_diffdet(&u);
        assert!(report.all_passed);
        assert_eq!(report.cases_checked, 2);
    }

    #[test]
    fn diffdet_exhaustive_small() {
        for n in 1..=3 {
            let report = check_diffdet(&generic_matrix(n).unwrap());
            assert!(report.all_passed, "n = {n}: {:?}", report.first_failure);
            assert_eq!(report.cases_checked, 2 * n * n);
        }
    }

    #[test]
    fn derdet1_frozen_case() {
        // ∂_11(det X) = x_22 for n = 2, and size 1 is the constant 1.
        let report = check_derdet1(2).unwrap();
        assert!(report.all_passed);
        assert_eq!(report.cases_checked, 4);
        assert_eq!(
            generic_matrix(2).unwrap().det().partial(1, 1),
            p("x2_2")
        );
        assert!(check_derdet1(1).unwrap().all_passed);
    }

    #[test]
    fn derdet2_frozen_cases() {
        let x = generic_matrix(2).unwrap();
        let det = x.det();
        // i = j = 1: Σ_ν x_1ν ∂_1ν det = det
        let s: Polynomial = (1..=2)
            .map(|nu| x.entry(1, nu).clone() * det.partial(1, nu as u16))
            .fold(Polynomial::zero(), |a, b| a + b);
        assert_eq!(s, det);
        // i = 1, j = 2: the mixed sum vanishes
        let s: Polynomial = (1..=2)
            .map(|nu| x.entry(1, nu).clone() * det.partial(2, nu as u16))
            .fold(Polynomial::zero(), |a, b| a + b);
        assert_eq!(s, Polynomial::zero());

        assert!(check_derdet2(1).unwrap().all_passed);
        assert!(check_derdet2(3).unwrap().all_passed);
    }

    #[test]
    fn derdet3_frozen_cases() {
        let x = generic_matrix(2).unwrap();
        let det = x.det();
        // (1,2|1,2): ∂_11 ∂_22 det = 1 and the sign (−1)^6 is +.
        assert_eq!(det.partial(1, 1).partial(2, 2), p("1"));
        assert_eq!(x.comp_minor(&[1, 2], &[1, 2]).unwrap(), p("1"));
        // Repetition kills both sides.
        assert_eq!(det.partial(1, 1).partial(1, 2), Polynomial::zero());
        assert_eq!(x.comp_minor(&[1, 1], &[1, 2]).unwrap(), Polynomial::zero());
        // Unsorted tuple (2,1|1,2): both sides agree with the sign extension.
        let lhs = det.partial(2, 1).partial(1, 2);
        let minor = x.comp_minor(&[2, 1], &[1, 2]).unwrap();
        assert_eq!(lhs, minor); // Σ indices = 6, sign +
    }

    #[test]
    fn derdet3_exhaustive_small() {
        for n in 1..=3 {
            for k in 1..=n {
                let report = check_derdet3(n, k).unwrap();
                assert!(report.all_passed, "n={n} k={k}: {:?}", report.first_failure);
                assert_eq!(report.cases_checked, n.pow(2 * k as u32));
            }
        }
    }

    #[test]
    fn derdet3_rejects_bad_order() {
        assert_eq!(
            check_derdet3(2, 3).unwrap_err(),
            Error::IndexOutOfRange { index: 3, n: 2 }
        );
        assert_eq!(
            check_derdet3(2, 0).unwrap_err(),
            Error::IndexOutOfRange { index: 0, n: 2 }
        );
    }

    #[test]
    fn phi_checks() {
        for n in 1..=3 {
            let report = check_phi(n).unwrap();
            assert!(report.all_passed, "n = {n}: {:?}", report.first_failure);
        }
        assert_eq!(transpose_automorphism(&p("x1_2")), p("x2_1"));
    }

    #[test]
    fn reports_catch_failures() {
        // A deliberately wrong identity must produce a failure witness.
        let mut report = DerivationReport::new(2, LemmaId::Derdet1);
        report.case(&[1, 1], &p("x1_1"), &p("x2_2"));
        assert!(!report.all_passed);
        let failure = report.first_failure.unwrap();
        assert_eq!(failure.indices, vec![1, 1]);
        assert_eq!(failure.lhs, "x1_1");
        assert_eq!(failure.rhs, "x2_2");
    }

    #[test]
    fn mixed_partials_commute_on_det() {
        let det = generic_matrix(3).unwrap().det();
        let a = det.partial(1, 2).partial(2, 3).partial(3, 1);
        let b = det.partial(3, 1).partial(1, 2).partial(2, 3);
        let c = det.partial(2, 3).partial(3, 1).partial(1, 2);
        assert_eq!(a, b);
        assert_eq!(b, c);
    }
}
