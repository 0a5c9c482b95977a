//! Residue arithmetic modulo m, with m ≥ 2 and zerodivisors allowed.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An element of Z/m.
///
/// `modulus == 0` marks an *unbound* integer constant: the value `zero()`,
/// `one()` and their sums/negations take before they meet a bound element.
/// Binary operations bind such constants to the other operand's modulus, so
/// generic code (identity matrices, hyperbolic matrices, folds) works without
/// threading the modulus through every call. Two bound operands must share
/// their modulus; mixing moduli is a caller bug and panics.
#[derive(Debug, Clone, Copy)]
pub struct ModInt {
    value: i128,
    modulus: u64,
}

impl ModInt {
    /// A residue in Z/m. Requires m ≥ 2.
    pub fn new(value: i128, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Parse(format!("modulus must be >= 2, got {modulus}")));
        }
        Ok(Self {
            value: value.rem_euclid(modulus as i128),
            modulus,
        })
    }

    /// Reduce an arbitrary-precision integer mod m.
    pub fn from_bigint(value: &BigInt, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Parse(format!("modulus must be >= 2, got {modulus}")));
        }
        let m = BigInt::from(modulus);
        let mut r = value % &m;
        if r.is_negative() {
            r += &m;
        }
        let value = r.to_i128().expect("reduced residue fits in i128");
        Ok(Self { value, modulus })
    }

    /// An unbound integer constant (not yet attached to a modulus).
    pub fn constant(value: i128) -> Self {
        Self { value, modulus: 0 }
    }

    /// The least nonnegative representative. Unbound constants report their
    /// integer value, which may be negative.
    pub fn value(&self) -> i128 {
        self.value
    }

    /// The modulus, or `None` for an unbound constant.
    pub fn modulus(&self) -> Option<u64> {
        (self.modulus != 0).then_some(self.modulus)
    }

    /// Canonicalize into Z/m. Already-bound values must match `modulus`.
    pub fn bind(&self, modulus: u64) -> Result<Self> {
        if self.modulus != 0 && self.modulus != modulus {
            return Err(Error::RingMismatch);
        }
        Self::new(self.value, modulus)
    }

    fn reduced(&self, modulus: u64) -> i128 {
        debug_assert!(self.modulus == 0 || self.modulus == modulus);
        self.value.rem_euclid(modulus as i128)
    }

    /// Common modulus of two operands; panics on a bound/bound mismatch.
    fn joint_modulus(&self, rhs: &Self) -> u64 {
        match (self.modulus, rhs.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing residues of different moduli {a} and {b}"),
        }
    }

    fn binop(&self, rhs: &Self, f: impl Fn(i128, i128) -> i128) -> Self {
        let m = self.joint_modulus(rhs);
        if m == 0 {
            Self {
                value: f(self.value, rhs.value),
                modulus: 0,
            }
        } else {
            Self {
                value: f(self.reduced(m), rhs.reduced(m)).rem_euclid(m as i128),
                modulus: m,
            }
        }
    }
}

impl PartialEq for ModInt {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, 0) => self.value == other.value,
            (a, b) if a != 0 && b != 0 => a == b && self.value == other.value,
            // One side is an unbound constant: compare in the bound ring.
            _ => {
                let m = self.modulus.max(other.modulus);
                self.reduced(m) == other.reduced(m)
            }
        }
    }
}

impl Eq for ModInt {}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Neg for ModInt {
    type Output = Self;
    fn neg(self) -> Self {
        if self.modulus == 0 {
            Self {
                value: -self.value,
                modulus: 0,
            }
        } else {
            Self {
                value: (-self.value).rem_euclid(self.modulus as i128),
                modulus: self.modulus,
            }
        }
    }
}

macro_rules! modint_binop {
    ($trait:ident, $method:ident, $op:tt, $checked:ident) => {
        impl<'a> $trait<&'a ModInt> for ModInt {
            type Output = ModInt;
            fn $method(self, rhs: &'a ModInt) -> ModInt {
                self.binop(rhs, |a, b| {
                    a.$checked(b)
                        .unwrap_or_else(|| panic!("integer constant overflow in {}", stringify!($method)))
                })
            }
        }
        impl $trait<ModInt> for ModInt {
            type Output = ModInt;
            fn $method(self, rhs: ModInt) -> ModInt {
                self $op &rhs
            }
        }
    };
}

modint_binop!(Add, add, +, checked_add);
modint_binop!(Sub, sub, -, checked_sub);
modint_binop!(Mul, mul, *, checked_mul);

impl AddAssign for ModInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.clone() + rhs;
    }
}

impl SubAssign for ModInt {
    fn sub_assign(&mut self, rhs: Self) {
        *self = self.clone() - rhs;
    }
}

impl Zero for ModInt {
    fn zero() -> Self {
        Self::constant(0)
    }

    fn is_zero(&self) -> bool {
        if self.modulus == 0 {
            self.value == 0
        } else {
            self.reduced(self.modulus) == 0
        }
    }
}

impl One for ModInt {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Scalar for ModInt {
    fn is_unit(&self) -> bool {
        if self.modulus == 0 {
            self.value == 1 || self.value == -1
        } else {
            self.value.gcd(&(self.modulus as i128)) == 1
        }
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.modulus == 0 {
            return (self.value == 1 || self.value == -1).then(|| self.clone());
        }
        let m = self.modulus as i128;
        let ext = self.value.extended_gcd(&m);
        if ext.gcd != 1 {
            return None;
        }
        Some(Self {
            value: ext.x.rem_euclid(m),
            modulus: self.modulus,
        })
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.modulus == 0 || other.modulus == 0 || self.modulus == other.modulus
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: i128, modulus: u64) -> ModInt {
        ModInt::new(v, modulus).unwrap()
    }

    #[test]
    fn add_reduces() {
        // 3 + 4 = 2 in Z/5
        assert_eq!(m(3, 5) + m(4, 5), m(2, 5));
    }

    #[test]
    fn mul_identity_char_two() {
        assert_eq!(m(1, 2) * m(1, 2), m(1, 2));
    }

    #[test]
    fn unit_detection_composite() {
        // gcd(4, 6) = 2, so 4 is not a unit of Z/6
        assert!(!m(4, 6).is_unit());
        assert!(m(5, 6).is_unit());
    }

    #[test]
    fn inverse_mod_seven() {
        // 3 * 5 = 15 = 1 mod 7
        assert_eq!(m(3, 7).try_inverse(), Some(m(5, 7)));
        assert_eq!(m(0, 7).try_inverse(), None);
    }

    #[test]
    fn inverse_times_self_is_one() {
        for modulus in [2u64, 5, 6, 7, 97] {
            for v in 0..modulus.min(40) {
                let x = m(v as i128, modulus);
                if x.is_unit() {
                    let inv = x.try_inverse().unwrap();
                    assert_eq!(x * inv, m(1, modulus));
                }
            }
        }
    }

    #[test]
    fn constants_bind_on_contact() {
        let one = ModInt::one();
        assert_eq!(one.clone() + m(4, 5), m(0, 5));
        assert_eq!(-ModInt::one() * m(3, 7), m(4, 7));
        // equality across bound/unbound
        assert_eq!(ModInt::constant(-1), m(6, 7));
        assert_ne!(ModInt::constant(2), m(0, 7));
    }

    #[test]
    fn negative_input_is_reduced() {
        assert_eq!(m(-3, 7), m(4, 7));
        assert_eq!(
            ModInt::from_bigint(&BigInt::from(-3), 7).unwrap(),
            m(4, 7)
        );
    }

    #[test]
    fn bind_mismatch_is_error() {
        assert_eq!(m(1, 5).bind(7), Err(Error::RingMismatch));
        assert_eq!(ModInt::constant(-1).bind(7).unwrap(), m(6, 7));
    }
}
