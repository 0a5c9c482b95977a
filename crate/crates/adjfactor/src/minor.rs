//! Minor symbols: row/column index tuples with alternating normalization.
//!
//! A symbol holds two index lists of equal length k, either selecting a k×k
//! submatrix (plain) or deleting k rows and columns (complementary). Symbols
//! are alternating in each list: sorting contributes the sign of the sorting
//! permutations, and any repeated index makes the value zero.

use crate::error::{Error, Result};

/// A (possibly complementary) minor symbol with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorSymbol {
    rows: Vec<usize>,
    cols: Vec<usize>,
    complementary: bool,
}

impl MinorSymbol {
    /// The submatrix symbol on the listed rows and columns.
    pub fn plain(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        Self::build(rows, cols, false)
    }

    /// The symbol deleting the listed rows and columns.
    pub fn complementary(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        Self::build(rows, cols, true)
    }

    fn build(rows: Vec<usize>, cols: Vec<usize>, complementary: bool) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::UnevenSymbol {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            complementary,
        })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn is_complementary(&self) -> bool {
        self.complementary
    }

    /// Number of indices in each list.
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Sorted index lists together with the alternating sign: 0 when either
    /// list repeats an index, otherwise the product of the signs of the two
    /// sorting permutations.
    pub fn normalize(&self) -> (i8, Vec<usize>, Vec<usize>) {
        let (sr, rows) = sort_with_sign(&self.rows);
        let (sc, cols) = sort_with_sign(&self.cols);
        (sr * sc, rows, cols)
    }
}

/// Sort an index list, returning the permutation sign by inversion count.
/// The sign is 0 when the list has a repeated entry.
pub fn sort_with_sign(indices: &[usize]) -> (i8, Vec<usize>) {
    let mut inversions = 0usize;
    for (a, &x) in indices.iter().enumerate() {
        for &y in &indices[a + 1..] {
            if x == y {
                return (0, {
                    let mut v = indices.to_vec();
                    v.sort_unstable();
                    v
                });
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    (if inversions % 2 == 0 { 1 } else { -1 }, sorted)
}

/// The 1-based indices of 1..=n missing from `sorted`, which must be a
/// strictly increasing list within range.
pub fn complement(sorted: &[usize], n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n - sorted.len());
    let mut it = sorted.iter().peekable();
    for i in 1..=n {
        if it.peek() == Some(&&i) {
            it.next();
        } else {
            out.push(i);
        }
    }
    out
}

/// Check that every index lies in 1..=n.
pub fn check_range(indices: &[usize], n: usize) -> Result<()> {
    for &i in indices {
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_lists_have_positive_sign() {
        let sym = MinorSymbol::plain(vec![1, 2], vec![1, 2]).unwrap();
        assert_eq!(sym.normalize(), (1, vec![1, 2], vec![1, 2]));
        let empty = MinorSymbol::plain(vec![], vec![]).unwrap();
        assert_eq!(empty.normalize(), (1, vec![], vec![]));
    }

    #[test]
    fn one_swap_negates() {
        let sym = MinorSymbol::plain(vec![2, 1], vec![1, 2]).unwrap();
        assert_eq!(sym.normalize().0, -1);
        let sym = MinorSymbol::complementary(vec![2, 1], vec![2, 1]).unwrap();
        assert_eq!(sym.normalize().0, 1);
    }

    #[test]
    fn three_cycle_is_even() {
        let (sign, sorted) = sort_with_sign(&[2, 3, 1]);
        assert_eq!((sign, sorted), (1, vec![1, 2, 3]));
        assert_eq!(sort_with_sign(&[3, 2, 1]).0, -1);
    }

    #[test]
    fn repeats_vanish() {
        assert_eq!(sort_with_sign(&[1, 1]).0, 0);
        let sym = MinorSymbol::plain(vec![1, 2, 1], vec![1, 2, 3]).unwrap();
        assert_eq!(sym.normalize().0, 0);
    }

    #[test]
    fn uneven_lists_are_rejected() {
        assert_eq!(
            MinorSymbol::plain(vec![1], vec![1, 2]),
            Err(Error::UnevenSymbol { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&[2, 4], 5), vec![1, 3, 5]);
        assert_eq!(complement(&[], 3), vec![1, 2, 3]);
        assert_eq!(complement(&[1, 2, 3], 3), Vec::<usize>::new());
    }

    #[test]
    fn range_checks() {
        assert!(check_range(&[1, 3], 3).is_ok());
        assert_eq!(
            check_range(&[0], 3),
            Err(Error::IndexOutOfRange { index: 0, n: 3 })
        );
        assert_eq!(
            check_range(&[4], 3),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
    }
}
