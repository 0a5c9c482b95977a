//! Sparse multivariate polynomials over Z in the matrix variables x_ij.
//!
//! Variables are indexed by 1-based pairs (i, j) and ordered
//! x_11 > x_12 > ... > x_1n > x_21 > ... > x_nn. Monomials compare in graded
//! lexicographic order; polynomials keep their terms sorted descending with
//! no zero coefficients, so structural equality is ring equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{big_int_mul, Scalar};

/// A power product of matrix variables. Exponents are kept sorted by
/// variable pair (i, j) ascending and are always positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<((u16, u16), u32)>,
}

impl Monomial {
    /// The empty product.
    pub fn unit() -> Self {
        Self::default()
    }

    /// The single variable x_ij. Indices are 1-based.
    pub fn var(i: u16, j: u16) -> Self {
        assert!(i >= 1 && j >= 1, "variable indices are 1-based");
        Self {
            exps: vec![((i, j), 1)],
        }
    }

    pub fn is_unit_monomial(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Exponent of x_ij in this monomial.
    pub fn exponent(&self, i: u16, j: u16) -> u32 {
        self.exps
            .binary_search_by_key(&(i, j), |&(v, _)| v)
            .map(|pos| self.exps[pos].1)
            .unwrap_or(0)
    }

    /// Sorted (variable, exponent) pairs.
    pub fn factors(&self) -> &[((u16, u16), u32)] {
        &self.exps
    }

    fn mul(&self, other: &Self) -> Self {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        exps.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        exps.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    exps.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    exps.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { exps }
    }

    /// Divide by x_ij once, returning the old exponent. `None` when the
    /// variable does not occur.
    fn reduce_var(&self, i: u16, j: u16) -> Option<(Self, u32)> {
        let pos = self.exps.binary_search_by_key(&(i, j), |&(v, _)| v).ok()?;
        let e = self.exps[pos].1;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(pos);
        } else {
            exps[pos].1 = e - 1;
        }
        Some((Self { exps }, e))
    }

    /// Swap the row and column index of every variable.
    fn transpose(&self) -> Self {
        let mut exps: Vec<_> = self.exps.iter().map(|&((i, j), e)| ((j, i), e)).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        Self { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Same degree: lexicographic with x_11 the most significant variable.
        // Walking pairs ascending, the first mismatch decides: a missing
        // variable counts as exponent zero, and a smaller variable pair is a
        // more significant position.
        let (mut a, mut b) = (self.exps.iter(), other.exps.iter());
        loop {
            match (a.next(), b.next()) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, &((i, j), e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{i}_{j}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// One coefficient–monomial pair of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigInt,
    pub mono: Monomial,
}

/// An element of Z[x_11, x_12, ...], in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        let coeff = c.into();
        if coeff.is_zero() {
            return Self::default();
        }
        Self {
            terms: vec![Term {
                coeff,
                mono: Monomial::unit(),
            }],
        }
    }

    /// The variable x_ij. Indices are 1-based.
    pub fn var(i: u16, j: u16) -> Self {
        Self {
            terms: vec![Term {
                coeff: BigInt::one(),
                mono: Monomial::var(i, j),
            }],
        }
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// The constant value, when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 if self.terms[0].mono.is_unit_monomial() => Some(self.terms[0].coeff.clone()),
            _ => None,
        }
    }

    /// Largest row or column index among the variables that occur.
    pub fn max_index(&self) -> u16 {
        self.terms
            .iter()
            .flat_map(|t| t.mono.factors())
            .map(|&((i, j), _)| i.max(j))
            .max()
            .unwrap_or(0)
    }

    fn from_map(map: BTreeMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.reverse();
        Self { terms }
    }

    /// Multiply every coefficient by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::default();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * k,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Formal partial derivative with respect to x_ij.
    pub fn partial(&self, i: u16, j: u16) -> Self {
        let mut map = BTreeMap::new();
        for t in &self.terms {
            if let Some((mono, e)) = t.mono.reduce_var(i, j) {
                *map.entry(mono).or_insert_with(BigInt::zero) += &t.coeff * BigInt::from(e);
            }
        }
        Self::from_map(map)
    }

    /// Apply the substitution x_ij -> x_ji to every variable.
    pub fn transpose_vars(&self) -> Self {
        let mut map = BTreeMap::new();
        for t in &self.terms {
            *map.entry(t.mono.transpose()).or_insert_with(BigInt::zero) += &t.coeff;
        }
        Self::from_map(map)
    }

    /// Evaluate under an assignment of the variables, which is a ring
    /// homomorphism into the scalar type of the assigned values.
    pub fn eval<T: Scalar>(&self, assign: &impl Fn(u16, u16) -> T) -> T {
        let mut acc = T::zero();
        for t in &self.terms {
            let mut prod = big_int_mul(&t.coeff, &T::one());
            for &((i, j), e) in t.mono.factors() {
                let v = assign(i, j);
                for _ in 0..e {
                    prod = prod * &v;
                }
            }
            acc += prod;
        }
        acc
    }

    fn add_merge(&self, other: &Self, negate_rhs: bool) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        let sign = |c: &BigInt| if negate_rhs { -c } else { c.clone() };
        loop {
            match (a.peek(), b.peek()) {
                (Some(ta), Some(tb)) => match ta.mono.cmp(&tb.mono) {
                    // Descending order: bigger monomial first.
                    Ordering::Greater => {
                        terms.push((*a.next().unwrap()).clone());
                    }
                    Ordering::Less => {
                        let t = b.next().unwrap();
                        terms.push(Term {
                            coeff: sign(&t.coeff),
                            mono: t.mono.clone(),
                        });
                    }
                    Ordering::Equal => {
                        let (ta, tb) = (a.next().unwrap(), b.next().unwrap());
                        let coeff = &ta.coeff + sign(&tb.coeff);
                        if !coeff.is_zero() {
                            terms.push(Term {
                                coeff,
                                mono: ta.mono.clone(),
                            });
                        }
                    }
                },
                (Some(_), None) => terms.push((*a.next().unwrap()).clone()),
                (None, Some(_)) => {
                    let t = b.next().unwrap();
                    terms.push(Term {
                        coeff: sign(&t.coeff),
                        mono: t.mono.clone(),
                    });
                }
                (None, None) => break,
            }
        }
        Self { terms }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let abs = t.coeff.abs();
            if k == 0 {
                if t.coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if t.coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if t.mono.is_unit_monomial() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono)?;
            } else {
                write!(f, "{abs}*{}", t.mono)?;
            }
        }
        Ok(())
    }
}

impl Neg for Polynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self
                .terms
                .into_iter()
                .map(|t| Term {
                    coeff: -t.coeff,
                    mono: t.mono,
                })
                .collect(),
        }
    }
}

impl<'a> Add<&'a Polynomial> for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.add_merge(rhs, false)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        self + &rhs
    }
}

impl<'a> Sub<&'a Polynomial> for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.add_merge(rhs, true)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self - &rhs
    }
}

impl<'a> Mul<&'a Polynomial> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for ta in &self.terms {
            for tb in &rhs.terms {
                let mono = ta.mono.mul(&tb.mono);
                *map.entry(mono).or_insert_with(BigInt::zero) += &ta.coeff * &tb.coeff;
            }
        }
        Polynomial::from_map(map)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        self * &rhs
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Self) {
        *self = std::mem::take(self) + &rhs;
    }
}

impl SubAssign for Polynomial {
    fn sub_assign(&mut self, rhs: Self) {
        *self = std::mem::take(self) - &rhs;
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Scalar for Polynomial {
    fn is_unit(&self) -> bool {
        // The units of Z[x_11, ...] are the constants 1 and -1.
        matches!(self.as_constant(), Some(c) if c.magnitude().is_one())
    }

    fn try_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.clone())
    }
}

/// Parse the textual polynomial form, e.g. `3*x1_2*x2_1 - x1_1^2`.
///
/// Terms are joined by `+` or `-`; a term is `*`-separated factors, each an
/// integer literal or a variable `x<i>_<j>` with an optional `^<e>` power.
/// Whitespace is insignificant everywhere.
pub fn parse_polynomial(input: &str) -> Result<Polynomial> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let tokens = tokenize(&compact)?;
    Parser { tokens, pos: 0 }.parse()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Int(BigInt),
    Var(u16, u16),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let bytes = s.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    let read_number = |pos: &mut usize| -> Result<BigInt> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return Err(Error::Parse(format!("expected a number at offset {start} in {s:?}")));
        }
        s[start..*pos]
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer literal in {s:?}")))
    };
    while pos < bytes.len() {
        match bytes[pos] {
            b'+' => {
                tokens.push(Token::Plus);
                pos += 1;
            }
            b'-' => {
                tokens.push(Token::Minus);
                pos += 1;
            }
            b'*' => {
                tokens.push(Token::Star);
                pos += 1;
            }
            b'^' => {
                tokens.push(Token::Caret);
                pos += 1;
            }
            b'0'..=b'9' => {
                tokens.push(Token::Int(read_number(&mut pos)?));
            }
            b'x' => {
                pos += 1;
                let i = read_number(&mut pos)?;
                if pos >= bytes.len() || bytes[pos] != b'_' {
                    return Err(Error::Parse(format!(
                        "variable must be of the form x<i>_<j> in {s:?}"
                    )));
                }
                pos += 1;
                let j = read_number(&mut pos)?;
                let to_index = |v: BigInt| -> Result<u16> {
                    match v.to_u16() {
                        Some(0) | None => Err(Error::Parse(format!(
                            "variable index must be a positive integer fitting u16 in {s:?}"
                        ))),
                        Some(v) => Ok(v),
                    }
                };
                tokens.push(Token::Var(to_index(i)?, to_index(j)?));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {:?} in {s:?}",
                    other as char
                )));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse(mut self) -> Result<Polynomial> {
        if self.tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut acc = Polynomial::zero();
        let mut negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.parse_term(negate)?;
            acc += term;
            match self.next() {
                None => break,
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                Some(tok) => {
                    return Err(Error::Parse(format!("expected + or -, found {tok:?}")));
                }
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self, negate: bool) -> Result<Polynomial> {
        let mut coeff = if negate {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let mut mono = Monomial::unit();
        let mut factors = 0usize;
        loop {
            match self.peek() {
                Some(Token::Int(_)) => {
                    let Some(Token::Int(v)) = self.next() else {
                        unreachable!()
                    };
                    coeff *= v;
                    factors += 1;
                }
                Some(Token::Var(..)) => {
                    let Some(Token::Var(i, j)) = self.next() else {
                        unreachable!()
                    };
                    let exp = if matches!(self.peek(), Some(Token::Caret)) {
                        self.pos += 1;
                        let Some(Token::Int(e)) = self.next() else {
                            return Err(Error::Parse("expected an exponent after ^".into()));
                        };
                        e.to_u32()
                            .ok_or_else(|| Error::Parse("exponent out of range".into()))?
                    } else {
                        1
                    };
                    let mut power = Monomial::unit();
                    let var = Monomial::var(i, j);
                    for _ in 0..exp {
                        power = power.mul(&var);
                    }
                    mono = mono.mul(&power);
                    factors += 1;
                }
                _ => {
                    return Err(Error::Parse("expected a factor".into()));
                }
            }
            if matches!(self.peek(), Some(Token::Star)) {
                self.pos += 1;
            } else {
                break;
            }
        }
        if factors == 0 {
            return Err(Error::Parse("empty term".into()));
        }
        let mut p = Polynomial {
            terms: vec![Term { coeff, mono }],
        };
        if p.terms[0].coeff.is_zero() {
            p.terms.clear();
        }
        Ok(p)
    }
}
