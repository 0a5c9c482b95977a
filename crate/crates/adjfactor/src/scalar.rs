//! The scalar abstraction: elements of a commutative ring with decidable
//! equality, exact arithmetic, and a unit test.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of a commutative ring.
///
/// All arithmetic is exact and equality agrees with mathematical equality in
/// the ring (values are kept in canonical form). `zero()` and `one()` come
/// from num-traits; rings with runtime parameters (a modulus, a variable
/// grid) treat those as integer constants that bind to the parameters of the
/// first concrete operand they meet.
pub trait Scalar:
    Clone
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Self, Output = Self>
    + Sub<Self, Output = Self>
    + Mul<Self, Output = Self>
    + AddAssign<Self>
    + SubAssign<Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Does the element have a multiplicative inverse in its ring?
    fn is_unit(&self) -> bool;

    /// The multiplicative inverse, if `self` is a unit.
    fn try_inverse(&self) -> Option<Self>;

    /// The multiplicative inverse, or `Error::NotAUnit`.
    fn inverse(&self) -> Result<Self> {
        self.try_inverse().ok_or(Error::NotAUnit)
    }

    /// Whether two elements may legally be combined (same ring parameters).
    /// Parameter-free rings always answer true; constants are compatible
    /// with everything.
    fn same_ring(&self, _other: &Self) -> bool {
        true
    }
}

/// `k * x` computed by double-and-add, so no `from_i64` lift is needed.
pub fn int_mul<T: Scalar>(k: i64, x: &T) -> T {
    if k == 0 || x.is_zero() {
        return T::zero();
    }
    let negate = k < 0;
    let mut k = k.unsigned_abs();
    let mut base = x.clone();
    let mut acc = T::zero();
    loop {
        if k & 1 == 1 {
            acc += base.clone();
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        base = base.clone() + &base;
    }
    if negate {
        -acc
    } else {
        acc
    }
}

/// `k * x` for an arbitrary-precision integer `k`.
pub fn big_int_mul<T: Scalar>(k: &BigInt, x: &T) -> T {
    if k.is_zero() || x.is_zero() {
        return T::zero();
    }
    let mut acc = T::zero();
    let mut base = x.clone();
    let magnitude = k.magnitude();
    let bits = magnitude.bits();
    for i in 0..bits {
        if magnitude.bit(i) {
            acc += base.clone();
        }
        if i + 1 < bits {
            base = base.clone() + &base;
        }
    }
    if k.is_negative() {
        -acc
    } else {
        acc
    }
}

impl Scalar for BigInt {
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }

    fn try_inverse(&self) -> Option<Self> {
        // 1 and -1 are their own inverses; nothing else is invertible in Z.
        if self.is_unit() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Scalar for BigRational {
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(int(p), int(q))
    }

    #[test]
    fn integer_add_and_mul() {
        assert_eq!(int(2) + int(3), int(5));
        assert_eq!(int(-4) * int(6), int(-24));
    }

    #[test]
    fn rational_mul_reduces() {
        // 1/2 * 2/3 = 1/3
        assert_eq!(rat(1, 2) * rat(2, 3), rat(1, 3));
    }

    #[test]
    fn integer_units() {
        assert!(int(-1).is_unit());
        assert!(int(1).is_unit());
        assert!(!int(2).is_unit());
        assert_eq!(int(2).inverse(), Err(Error::NotAUnit));
        assert_eq!(int(-1).inverse(), Ok(int(-1)));
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(rat(2, 3).inverse(), Ok(rat(3, 2)));
        assert_eq!(rat(0, 1).inverse(), Err(Error::NotAUnit));
    }

    #[test]
    fn int_mul_matches_repeated_addition() {
        for k in -12i64..=12 {
            let expect = int(k) * int(7);
            assert_eq!(int_mul(k, &int(7)), expect, "k = {k}");
        }
    }

    #[test]
    fn big_int_mul_matches() {
        let k = int(123456789) * int(987654321);
        assert_eq!(big_int_mul(&k, &int(3)), &k * int(3));
        assert_eq!(big_int_mul(&(-&k), &int(3)), -&k * int(3));
    }
}
