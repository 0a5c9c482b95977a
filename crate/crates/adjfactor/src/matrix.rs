//! Dense square matrices over an exact scalar ring.
//!
//! Determinants use cofactor expansion memoized over column subsets, which
//! stays valid over rings with zerodivisors where elimination and fraction
//! free pivoting do not. The table for one matrix costs O(2^n · n) ring
//! operations and one pass of it yields every complementary minor with a
//! fixed set of deleted rows, which is what the adjoint and the alternating
//! constructions consume.

use std::fmt;

use crate::error::{Error, Result};
use crate::minor::{check_range, complement, MinorSymbol};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Largest size the subset table will allocate for (2^n entries).
const MAX_DET_SIZE: usize = 24;

/// A square matrix with 1-based entry access.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T: Scalar> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Build from row vectors. Every row must have the same length as the
    /// number of rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n < 1 {
            return Err(Error::InvalidSize { got: 0, min: 1 });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NonSquare { expected: n });
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    /// Build from a function of the 1-based position (i, j).
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n >= 1, "matrices have size at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| T::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The (i, j) entry, 1-based. Panics outside 1..=n.
    pub fn entry(&self, i: usize, j: usize) -> &T {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "entry ({i}, {j}) out of range for size {}",
            self.n
        );
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Replace the (i, j) entry, 1-based.
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    fn at(&self, i0: usize, j0: usize) -> &T {
        &self.entries[i0 * self.n + j0]
    }

    /// Entries of row i, 1-based.
    pub fn row(&self, i: usize) -> &[T] {
        assert!((1..=self.n).contains(&i));
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: rhs.n,
            });
        }
        for (a, b) in self.entries.iter().zip(&rhs.entries) {
            if !a.same_ring(b) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            let mut acc = T::zero();
            for k in 0..n {
                acc += self.at(i - 1, k).clone() * rhs.at(k, j - 1);
            }
            acc
        }))
    }

    pub fn matadd(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        Ok(Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn matsub(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        Ok(Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    pub fn scalar_mul(&self, c: &T) -> Self {
        self.map(|e| e.clone() * c)
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.at(j - 1, i - 1).clone())
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.n {
            acc += self.at(i, i).clone();
        }
        acc
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n)
    }

    /// Determinants of the submatrices on rows `kept_rows[0..k]` (0-based)
    /// and every column subset of size k, indexed by column bitmask. Entry 0
    /// is the empty determinant, 1.
    fn col_subset_dets(&self, kept_rows: &[usize]) -> Vec<T> {
        assert!(
            self.n <= MAX_DET_SIZE,
            "determinant table grows as 2^n; size {} is too large",
            self.n
        );
        let n = self.n;
        let r = kept_rows.len();
        let mut dp = vec![T::zero(); 1usize << n];
        dp[0] = T::one();
        for mask in 1..dp.len() {
            let k = mask.count_ones() as usize;
            if k > r {
                continue;
            }
            // Expand along the k-th kept row (the last row of the block).
            let row = kept_rows[k - 1];
            let mut acc = T::zero();
            let mut positive = (k - 1) % 2 == 0;
            let mut rest = mask;
            while rest != 0 {
                let c = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let term = self.at(row, c).clone() * &dp[mask ^ (1usize << c)];
                if positive {
                    acc += term;
                } else {
                    acc -= term;
                }
                positive = !positive;
            }
            dp[mask] = acc;
        }
        dp
    }

    /// Exact determinant.
    pub fn det(&self) -> T {
        let rows: Vec<usize> = (0..self.n).collect();
        let dp = self.col_subset_dets(&rows);
        dp[(1usize << self.n) - 1].clone()
    }

    /// All complementary minors that delete the given rows (0-based, strictly
    /// increasing), queried by deleted-column set.
    pub(crate) fn comp_minor_table(&self, deleted_rows: &[usize]) -> CompMinorTable<T> {
        debug_assert!(deleted_rows.windows(2).all(|w| w[0] < w[1]));
        let deleted: Vec<usize> = deleted_rows.iter().map(|&r| r + 1).collect();
        let kept: Vec<usize> = complement(&deleted, self.n).iter().map(|&r| r - 1).collect();
        CompMinorTable {
            full: (1usize << self.n) - 1,
            dets: self.col_subset_dets(&kept),
        }
    }

    /// The classical adjoint: entry (i, j) is (−1)^{i+j} times the minor
    /// that deletes row j and column i. Satisfies adj(U)·U = det(U)·I =
    /// U·adj(U) over every commutative ring.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for j0 in 0..n {
            let table = self.comp_minor_table(&[j0]);
            for i0 in 0..n {
                let v = table.get_mask(1usize << i0).clone();
                let v = if (i0 + j0) % 2 == 0 { v } else { -v };
                out.set(i0 + 1, j0 + 1, v);
            }
        }
        out
    }

    /// A^{-1} = det(A)^{-1}·adj(A), defined exactly when det(A) is a unit.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let inv = det.try_inverse().ok_or(Error::NotInvertible)?;
        Ok(self.adjoint().scalar_mul(&inv))
    }

    /// The minor [rows | cols]: alternating sign times the determinant of
    /// the submatrix on the sorted index lists. Zero on repeated indices;
    /// the empty symbol has value 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<T> {
        let sym = MinorSymbol::plain(rows.to_vec(), cols.to_vec())?;
        self.eval_symbol(&sym)
    }

    /// The complementary minor [rows |^ cols]: alternating sign times the
    /// determinant after deleting the listed rows and columns. For k = n the
    /// remaining determinant is empty and has value 1.
    pub fn comp_minor(&self, rows: &[usize], cols: &[usize]) -> Result<T> {
        let sym = MinorSymbol::complementary(rows.to_vec(), cols.to_vec())?;
        self.eval_symbol(&sym)
    }

    /// Evaluate a minor symbol on this matrix.
    pub fn eval_symbol(&self, sym: &MinorSymbol) -> Result<T> {
        check_range(sym.rows(), self.n)?;
        check_range(sym.cols(), self.n)?;
        let (sign, rows, cols) = sym.normalize();
        if sign == 0 {
            return Ok(T::zero());
        }
        let (rows, cols) = if sym.is_complementary() {
            (complement(&rows, self.n), complement(&cols, self.n))
        } else {
            (rows, cols)
        };
        let value = if rows.is_empty() {
            T::one()
        } else {
            let k = rows.len();
            Matrix::from_fn(k, |a, b| self.at(rows[a - 1] - 1, cols[b - 1] - 1).clone()).det()
        };
        Ok(if sign > 0 { value } else { -value })
    }

    /// True iff Aᵀ = −A and every diagonal entry is zero. The diagonal
    /// condition is checked on its own; it is not implied by antisymmetry
    /// when 2 is a zerodivisor.
    pub fn is_alternating(&self) -> bool {
        for i in 0..self.n {
            if !self.at(i, i).is_zero() {
                return false;
            }
            for j in (i + 1)..self.n {
                if self.at(i, j).clone() + self.at(j, i) != T::zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Complementary minors with a fixed deleted-row set, one table lookup each.
pub(crate) struct CompMinorTable<T> {
    full: usize,
    dets: Vec<T>,
}

impl<T> CompMinorTable<T> {
    /// Minor deleting the columns in `deleted_cols_mask` (0-based bitmask).
    pub(crate) fn get_mask(&self, deleted_cols_mask: usize) -> &T {
        &self.dets[self.full ^ deleted_cols_mask]
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            write!(f, "[")?;
            for j in 1..=self.n {
                if j > 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The generic n×n matrix whose (i, j) entry is the variable x_ij.
pub fn generic_matrix(n: usize) -> Result<Matrix<Polynomial>> {
    if n < 1 {
        return Err(Error::InvalidSize { got: n, min: 1 });
    }
    assert!(n <= u16::MAX as usize);
    Ok(Matrix::from_fn(n, |i, j| {
        Polynomial::var(i as u16, j as u16)
    }))
}

/// The 2m×2m alternating matrix [[0, I_m], [−I_m, 0]]. Its determinant is 1
/// over every ring and its square is −I.
pub fn hyperbolic<T: Scalar>(m: usize) -> Result<Matrix<T>> {
    if m < 1 {
        return Err(Error::InvalidSize { got: m, min: 1 });
    }
    Ok(Matrix::from_fn(2 * m, |i, j| {
        if j == i + m {
            T::one()
        } else if i == j + m {
            -T::one()
        } else {
            T::zero()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modint::ModInt;
    use crate::Int;
    use num_traits::One;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<Int> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn det_frozen_values() {
        assert_eq!(int_matrix(&[&[1, 2], &[3, 4]]).det(), Int::from(-2));
        assert_eq!(
            int_matrix(&[&[2, 0, 1], &[1, 3, 5], &[0, 7, 2]]).det(),
            Int::from(-51)
        );
        assert_eq!(Matrix::<Int>::identity(5).det(), Int::from(1));
        assert_eq!(Matrix::<ModInt>::identity(4).det(), ModInt::one());
    }

    #[test]
    fn det_of_generic_two_by_two() {
        let x = generic_matrix(2).unwrap();
        assert_eq!(x.det().to_string(), "x1_1*x2_2 - x1_2*x2_1");
    }

    #[test]
    fn generic_det_has_factorial_terms_with_unit_coefficients() {
        for n in 1..=4 {
            let d = generic_matrix(n).unwrap().det();
            let expected: usize = (1..=n).product();
            assert_eq!(d.terms().len(), expected);
            assert!(d
                .terms()
                .iter()
                .all(|t| t.coeff == Int::from(1) || t.coeff == Int::from(-1)));
        }
    }

    #[test]
    fn adjoint_frozen_values() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(u.adjoint(), int_matrix(&[&[4, -2], &[-3, 1]]));
        let one = int_matrix(&[&[5]]);
        assert_eq!(one.adjoint(), int_matrix(&[&[1]]));
    }

    #[test]
    fn adjoint_of_generic_two_by_two() {
        // adj(X)ᵀ = [[x_22, −x_21], [−x_12, x_11]]
        let adj_t = generic_matrix(2).unwrap().adjoint().transpose();
        assert_eq!(adj_t.entry(1, 1).to_string(), "x2_2");
        assert_eq!(adj_t.entry(1, 2).to_string(), "-x2_1");
        assert_eq!(adj_t.entry(2, 1).to_string(), "-x1_2");
        assert_eq!(adj_t.entry(2, 2).to_string(), "x1_1");
    }

    #[test]
    fn adjoint_identity_both_sides() {
        let u = int_matrix(&[&[2, 0, 1], &[1, 3, 5], &[0, 7, 2]]);
        let adj = u.adjoint();
        let det_i = Matrix::identity(3).scalar_mul(&u.det());
        assert_eq!(adj.matmul(&u).unwrap(), det_i);
        assert_eq!(u.matmul(&adj).unwrap(), det_i);
    }

    #[test]
    fn minor_frozen_values() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(u.minor(&[1], &[2]).unwrap(), Int::from(2));
        assert_eq!(u.minor(&[1, 2], &[1, 2]).unwrap(), Int::from(-2));
        assert_eq!(u.minor(&[2, 1], &[1, 2]).unwrap(), Int::from(2));
        assert_eq!(u.minor(&[1, 1], &[1, 2]).unwrap(), Int::from(0));
        assert_eq!(u.minor(&[], &[]).unwrap(), Int::from(1));
    }

    #[test]
    fn comp_minor_frozen_values() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(u.comp_minor(&[1], &[1]).unwrap(), Int::from(4));
        assert_eq!(u.comp_minor(&[1, 2], &[1, 2]).unwrap(), Int::from(1));
        assert_eq!(u.comp_minor(&[2, 1], &[1, 2]).unwrap(), Int::from(-1));

        let x = generic_matrix(3).unwrap();
        let direct = x.comp_minor(&[1], &[2]).unwrap();
        let expected = x.minor(&[2, 3], &[1, 3]).unwrap();
        assert_eq!(direct, expected);
        assert_eq!(direct.to_string(), "x2_1*x3_3 - x2_3*x3_1");
    }

    #[test]
    fn minor_out_of_range() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            u.minor(&[3], &[1]),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        );
    }

    #[test]
    fn alternating_predicate() {
        assert!(int_matrix(&[&[0, 1], &[-1, 0]]).is_alternating());
        assert!(Matrix::<Int>::zero(3).is_alternating());
        assert!(!int_matrix(&[&[0, 1], &[1, 0]]).is_alternating());

        // Over Z/2 antisymmetry holds for the all-ones matrix, but the
        // diagonal does not vanish.
        let ones = Matrix::from_fn(2, |_, _| ModInt::new(1, 2).unwrap());
        assert!(!ones.is_alternating());
    }

    #[test]
    fn hyperbolic_shape_and_square() {
        let h: Matrix<Int> = hyperbolic(1).unwrap();
        assert_eq!(h, int_matrix(&[&[0, 1], &[-1, 0]]));
        assert_eq!(h.det(), Int::from(1));

        let h2: Matrix<Int> = hyperbolic(2).unwrap();
        assert_eq!(h2.det(), Int::from(1));
        assert!(h2.is_alternating());
        let minus_i = Matrix::<Int>::identity(4).neg();
        assert_eq!(h2.matmul(&h2).unwrap(), minus_i);
    }

    #[test]
    fn inverse_frozen_values() {
        let h: Matrix<Int> = hyperbolic(1).unwrap();
        assert_eq!(h.inverse().unwrap(), int_matrix(&[&[0, -1], &[1, 0]]));
        assert!(Matrix::<Int>::identity(3).inverse().unwrap().is_identity());
        assert_eq!(
            int_matrix(&[&[1, 2], &[3, 4]]).inverse(),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn inverse_over_rationals() {
        use crate::Rat;
        let u = Matrix::from_rows(vec![
            vec![Rat::from(Int::from(1)), Rat::from(Int::from(2))],
            vec![Rat::from(Int::from(3)), Rat::from(Int::from(4))],
        ])
        .unwrap();
        let inv = u.inverse().unwrap();
        assert!(u.matmul(&inv).unwrap().is_identity());
        assert!(inv.matmul(&u).unwrap().is_identity());
    }

    #[test]
    fn arithmetic_plumbing() {
        let u = int_matrix(&[&[1, 2], &[3, 4]]);
        let i = Matrix::<Int>::identity(2);
        assert_eq!(i.matmul(&u).unwrap(), u);
        assert_eq!(u.transpose().transpose(), u);
        assert_eq!(u.trace(), Int::from(5));
        assert_eq!(
            u.matadd(&u).unwrap(),
            u.scalar_mul(&Int::from(2))
        );
        assert_eq!(u.matsub(&u).unwrap(), Matrix::zero(2));

        let v = Matrix::<Int>::identity(3);
        assert_eq!(
            u.matmul(&v),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn nonsquare_rows_rejected() {
        assert_eq!(
            Matrix::from_rows(vec![vec![Int::from(1)], vec![Int::from(2), Int::from(3)]]),
            Err(Error::NonSquare { expected: 2 })
        );
        assert_eq!(
            Matrix::<Int>::from_rows(vec![]),
            Err(Error::InvalidSize { got: 0, min: 1 })
        );
    }

    #[test]
    fn size_one_constructors() {
        assert_eq!(generic_matrix(0).unwrap_err(), Error::InvalidSize { got: 0, min: 1 });
        assert_eq!(
            hyperbolic::<Int>(0).unwrap_err(),
            Error::InvalidSize { got: 0, min: 1 }
        );
        assert_eq!(generic_matrix(1).unwrap().entry(1, 1).to_string(), "x1_1");
    }
}
