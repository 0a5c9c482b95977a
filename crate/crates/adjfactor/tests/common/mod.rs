//! Independent oracles for the integration tests: determinants as signed
//! permutation sums and minors by literal row and column deletion. These
//! share no code path with the library's subset-table evaluators, so an
//! agreement between the two is evidence, not circularity.

#![allow(dead_code)]

use adjfactor::{Matrix, Scalar};

/// Advance to the next lexicographic permutation; false once exhausted.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// det(M) as the signed sum over all permutations.
pub fn leibniz_det<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = T::zero();
    loop {
        let mut inversions = 0usize;
        for a in 0..n {
            for b in (a + 1)..n {
                if perm[a] > perm[b] {
                    inversions += 1;
                }
            }
        }
        let mut prod = T::one();
        for (i, &j) in perm.iter().enumerate() {
            prod = prod * m.entry(i + 1, j + 1).clone();
        }
        if inversions % 2 == 0 {
            total = total + prod;
        } else {
            total = total - prod;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total
}

/// The minor that remains after deleting the given 1-based rows and columns
/// (sorted, distinct). Deleting everything leaves the empty determinant, 1.
pub fn deletion_comp_minor<T: Scalar>(
    m: &Matrix<T>,
    deleted_rows: &[usize],
    deleted_cols: &[usize],
) -> T {
    let n = m.n();
    let rows: Vec<usize> = (1..=n).filter(|i| !deleted_rows.contains(i)).collect();
    let cols: Vec<usize> = (1..=n).filter(|j| !deleted_cols.contains(j)).collect();
    assert_eq!(rows.len(), cols.len(), "oracle needs a square deletion");
    if rows.is_empty() {
        return T::one();
    }
    let sub = Matrix::from_fn(rows.len(), |i, j| m.entry(rows[i - 1], cols[j - 1]).clone());
    leibniz_det(&sub)
}

/// adj(M) from first principles: the (i, j) entry is the signed minor that
/// deletes row j and column i.
pub fn cofactor_adjoint<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    Matrix::from_fn(m.n(), |i, j| {
        let minor = deletion_comp_minor(m, &[j], &[i]);
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    })
}
