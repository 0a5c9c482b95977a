//! Ring descriptors and dynamically typed matrices for the I/O boundary.
//!
//! The algebra layer is generic over the scalar type; files and CLI flags
//! carry a [`RingDescriptor`] instead. [`RingOps`] bridges the two: parsing
//! and rendering entries in each ring's text grammar, canonicalizing values,
//! and sampling random elements, so boundary code can dispatch once on the
//! descriptor and stay generic afterwards.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modint::ModInt;
use crate::poly::{parse_polynomial, Polynomial};
use crate::sample::random_polynomial;
use crate::{Int, Rat, Scalar};

/// Which concrete ring a boundary value lives in. The serialized form is
/// the JSON ring object: {"kind": "mod", "modulus": 97} and friends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum RingDescriptor {
    #[serde(rename = "int")]
    Integer,
    #[serde(rename = "rational")]
    Rational,
    #[serde(rename = "mod")]
    ModM { modulus: u64 },
    #[serde(rename = "poly")]
    Poly { n_vars: usize },
}

impl RingDescriptor {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::ModM { modulus } if *modulus < 2 => Err(Error::Parse(format!(
                "modulus must be >= 2, got {modulus}"
            ))),
            Self::Poly { n_vars } if *n_vars < 1 => {
                Err(Error::Parse("polynomial grid needs n_vars >= 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// The JSON/CLI kind tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Integer => "int",
            Self::Rational => "rational",
            Self::ModM { .. } => "mod",
            Self::Poly { .. } => "poly",
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer => write!(f, "int"),
            Self::Rational => write!(f, "rational"),
            Self::ModM { modulus } => write!(f, "mod {modulus}"),
            Self::Poly { n_vars } => write!(f, "poly (n_vars = {n_vars})"),
        }
    }
}

/// A matrix tagged with its ring, as read from or written to files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DynMatrix {
    Integer(Matrix<Int>),
    Rational(Matrix<Rat>),
    ModM { modulus: u64, matrix: Matrix<ModInt> },
    Poly { n_vars: usize, matrix: Matrix<Polynomial> },
}

impl DynMatrix {
    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            Self::Integer(_) => RingDescriptor::Integer,
            Self::Rational(_) => RingDescriptor::Rational,
            Self::ModM { modulus, .. } => RingDescriptor::ModM { modulus: *modulus },
            Self::Poly { n_vars, .. } => RingDescriptor::Poly { n_vars: *n_vars },
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Self::Integer(m) => m.n(),
            Self::Rational(m) => m.n(),
            Self::ModM { matrix, .. } => matrix.n(),
            Self::Poly { matrix, .. } => matrix.n(),
        }
    }

    /// Entries rendered in the ring's text grammar, row-major.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        fn rows<T: RingOps>(m: &Matrix<T>, d: &RingDescriptor) -> Vec<Vec<String>> {
            (1..=m.n())
                .map(|i| (1..=m.n()).map(|j| m.entry(i, j).render_in(d)).collect())
                .collect()
        }
        let d = self.descriptor();
        match self {
            Self::Integer(m) => rows(m, &d),
            Self::Rational(m) => rows(m, &d),
            Self::ModM { matrix, .. } => rows(matrix, &d),
            Self::Poly { matrix, .. } => rows(matrix, &d),
        }
    }

    /// Parse a grid of entry strings in the descriptor's grammar.
    pub fn from_entry_strings(d: &RingDescriptor, rows: &[Vec<String>]) -> Result<Self> {
        d.validate()?;
        fn build<T: RingOps>(d: &RingDescriptor, rows: &[Vec<String>]) -> Result<Matrix<T>> {
            let parsed = rows
                .iter()
                .map(|row| row.iter().map(|s| T::parse_in(d, s)).collect::<Result<Vec<T>>>())
                .collect::<Result<Vec<Vec<T>>>>()?;
            Matrix::from_rows(parsed)
        }
        match d {
            RingDescriptor::Integer => Ok(Self::Integer(build(d, rows)?)),
            RingDescriptor::Rational => Ok(Self::Rational(build(d, rows)?)),
            RingDescriptor::ModM { modulus } => Ok(Self::ModM {
                modulus: *modulus,
                matrix: build(d, rows)?,
            }),
            RingDescriptor::Poly { n_vars } => Ok(Self::Poly {
                n_vars: *n_vars,
                matrix: build(d, rows)?,
            }),
        }
    }
}

/// Boundary operations each concrete scalar supports.
pub trait RingOps: Scalar {
    /// True when values of this type live in the described ring.
    fn matches(d: &RingDescriptor) -> bool;

    /// Parse one element from its text form.
    fn parse_in(d: &RingDescriptor, s: &str) -> Result<Self>;

    /// Canonical text form; parsing it back yields an equal element.
    fn render_in(&self, d: &RingDescriptor) -> String;

    /// Canonical representative (binds residues to their modulus, checks
    /// polynomial variables against the grid).
    fn canonical_in(self, d: &RingDescriptor) -> Result<Self>;

    /// A small random element, uniform over the documented entry ranges.
    fn sample_in(d: &RingDescriptor, rng: &mut ChaCha12Rng) -> Self;

    /// Tag a matrix with its descriptor, canonicalizing every entry.
    fn wrap_matrix(m: &Matrix<Self>, d: &RingDescriptor) -> Result<DynMatrix>;
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim())
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

fn expect_ring<T: RingOps>(d: &RingDescriptor) -> Result<()> {
    if T::matches(d) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

impl RingOps for Int {
    fn matches(d: &RingDescriptor) -> bool {
        matches!(d, RingDescriptor::Integer)
    }

    fn parse_in(d: &RingDescriptor, s: &str) -> Result<Self> {
        expect_ring::<Self>(d)?;
        parse_bigint(s)
    }

    fn render_in(&self, _d: &RingDescriptor) -> String {
        self.to_string()
    }

    fn canonical_in(self, _d: &RingDescriptor) -> Result<Self> {
        Ok(self)
    }

    fn sample_in(_d: &RingDescriptor, rng: &mut ChaCha12Rng) -> Self {
        Int::from(rng.gen_range(-9i64..=9))
    }

    fn wrap_matrix(m: &Matrix<Self>, d: &RingDescriptor) -> Result<DynMatrix> {
        expect_ring::<Self>(d)?;
        Ok(DynMatrix::Integer(m.clone()))
    }
}

impl RingOps for Rat {
    fn matches(d: &RingDescriptor) -> bool {
        matches!(d, RingDescriptor::Rational)
    }

    fn parse_in(d: &RingDescriptor, s: &str) -> Result<Self> {
        expect_ring::<Self>(d)?;
        let mut parts = s.splitn(2, '/');
        let numer = parse_bigint(parts.next().unwrap_or(""))?;
        let denom = match parts.next() {
            Some(q) => parse_bigint(q)?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rat::new(numer, denom))
    }

    fn render_in(&self, _d: &RingDescriptor) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn canonical_in(self, _d: &RingDescriptor) -> Result<Self> {
        Ok(self)
    }

    fn sample_in(_d: &RingDescriptor, rng: &mut ChaCha12Rng) -> Self {
        let numer = Int::from(rng.gen_range(-9i64..=9));
        let denom = Int::from(rng.gen_range(1i64..=9));
        Rat::new(numer, denom)
    }

    fn wrap_matrix(m: &Matrix<Self>, d: &RingDescriptor) -> Result<DynMatrix> {
        expect_ring::<Self>(d)?;
        Ok(DynMatrix::Rational(m.clone()))
    }
}

impl RingOps for ModInt {
    fn matches(d: &RingDescriptor) -> bool {
        matches!(d, RingDescriptor::ModM { .. })
    }

    fn parse_in(d: &RingDescriptor, s: &str) -> Result<Self> {
        let RingDescriptor::ModM { modulus } = d else {
            return Err(Error::RingMismatch);
        };
        ModInt::from_bigint(&parse_bigint(s)?, *modulus)
    }

    fn render_in(&self, d: &RingDescriptor) -> String {
        let RingDescriptor::ModM { modulus } = d else {
            return self.to_string();
        };
        match self.bind(*modulus) {
            Ok(bound) => bound.to_string(),
            Err(_) => self.to_string(),
        }
    }

    fn canonical_in(self, d: &RingDescriptor) -> Result<Self> {
        let RingDescriptor::ModM { modulus } = d else {
            return Err(Error::RingMismatch);
        };
        self.bind(*modulus)
    }

    fn sample_in(d: &RingDescriptor, rng: &mut ChaCha12Rng) -> Self {
        let RingDescriptor::ModM { modulus } = d else {
            panic!("sampling a residue needs a modulus descriptor");
        };
        ModInt::new(rng.gen_range(0..*modulus) as i128, *modulus)
            .expect("modulus validated by the descriptor")
    }

    fn wrap_matrix(m: &Matrix<Self>, d: &RingDescriptor) -> Result<DynMatrix> {
        let RingDescriptor::ModM { modulus } = d else {
            return Err(Error::RingMismatch);
        };
        d.validate()?;
        let mut bound = Vec::with_capacity(m.n());
        for i in 1..=m.n() {
            let mut row = Vec::with_capacity(m.n());
            for j in 1..=m.n() {
                row.push(m.entry(i, j).bind(*modulus)?);
            }
            bound.push(row);
        }
        Ok(DynMatrix::ModM {
            modulus: *modulus,
            matrix: Matrix::from_rows(bound)?,
        })
    }
}

impl RingOps for Polynomial {
    fn matches(d: &RingDescriptor) -> bool {
        matches!(d, RingDescriptor::Poly { .. })
    }

    fn parse_in(d: &RingDescriptor, s: &str) -> Result<Self> {
        let RingDescriptor::Poly { n_vars } = d else {
            return Err(Error::RingMismatch);
        };
        let p = parse_polynomial(s)?;
        p.canonical_in(&RingDescriptor::Poly { n_vars: *n_vars })
    }

    fn render_in(&self, _d: &RingDescriptor) -> String {
        self.to_string()
    }

    fn canonical_in(self, d: &RingDescriptor) -> Result<Self> {
        let RingDescriptor::Poly { n_vars } = d else {
            return Err(Error::RingMismatch);
        };
        let max = self.max_index() as usize;
        if max > *n_vars {
            return Err(Error::Parse(format!(
                "variable index {max} outside the {n_vars}x{n_vars} grid"
            )));
        }
        Ok(self)
    }

    fn sample_in(d: &RingDescriptor, rng: &mut ChaCha12Rng) -> Self {
        let RingDescriptor::Poly { n_vars } = d else {
            panic!("sampling a polynomial needs a grid descriptor");
        };
        random_polynomial(rng, *n_vars as u16, 3, 2)
    }

    fn wrap_matrix(m: &Matrix<Self>, d: &RingDescriptor) -> Result<DynMatrix> {
        let RingDescriptor::Poly { n_vars } = d else {
            return Err(Error::RingMismatch);
        };
        d.validate()?;
        for i in 1..=m.n() {
            for j in 1..=m.n() {
                m.entry(i, j)
                    .clone()
                    .canonical_in(d)?;
            }
        }
        Ok(DynMatrix::Poly {
            n_vars: *n_vars,
            matrix: m.clone(),
        })
    }
}
