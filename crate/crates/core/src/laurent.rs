//! Exact integer Laurent polynomials in a single labelled variable.
//!
//! A [`LaurentPoly`] is a finite map from integer exponents to nonzero
//! [`BigInt`] coefficients, tagged with the name of the formal variable it
//! is written in (for instance `exp(2[T])`). Arithmetic between polynomials
//! in different variables is refused rather than silently performed.
//!
//! The canonical text form lists terms by descending exponent using the
//! symbol `t`, eliding unit coefficients and the exponent `1`:
//!
//! ```text
//! t - 1 + t^-1
//! 2*t^3 - 3 + 2*t^-3
//! ```

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Symbol used for the formal variable in the text form.
pub const TEXT_SYMBOL: &str = "t";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaurentError {
    VariableMismatch {
        left: String,
        right: String,
    },
    NonPositivePower(i64),
    /// `coeff(-n) != parity * coeff(n)`.
    SymmetryViolation {
        exponent: i64,
    },
    ZeroPolynomial,
    DivisionByZero,
    InexactDivision,
    Parse {
        position: usize,
        message: String,
    },
}

impl fmt::Display for LaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentError::VariableMismatch { left, right } => {
                write!(f, "variable mismatch: `{left}` vs `{right}`")
            }
            LaurentError::NonPositivePower(m) => {
                write!(f, "substitution power must be positive, got {m}")
            }
            LaurentError::SymmetryViolation { exponent } => {
                write!(f, "polynomial is not symmetric at exponent {exponent}")
            }
            LaurentError::ZeroPolynomial => f.write_str("operation undefined on the zero polynomial"),
            LaurentError::DivisionByZero => f.write_str("division by the zero polynomial"),
            LaurentError::InexactDivision => f.write_str("division does not terminate with zero remainder"),
            LaurentError::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
        }
    }
}

impl core::error::Error for LaurentError {}

/// Sign factor `±1` relating `coeff(-n)` to `coeff(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    /// `(-1)^exponent`.
    pub fn from_exponent(exponent: i64) -> Self {
        if exponent.rem_euclid(2) == 0 {
            Parity::Plus
        } else {
            Parity::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }

    fn apply(self, c: &BigInt) -> BigInt {
        match self {
            Parity::Plus => c.clone(),
            Parity::Minus => -c,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
    var: String,
}

impl LaurentPoly {
    pub fn zero(var: impl Into<String>) -> Self {
        Self { coeffs: BTreeMap::new(), var: var.into() }
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::monomial(var, 0, BigInt::one())
    }

    pub fn constant(var: impl Into<String>, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: impl Into<String>, exponent: i64, c: impl Into<BigInt>) -> Self {
        Self::from_terms(var, [(exponent, c.into())])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I, C>(var: impl Into<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert_with(BigInt::zero) += c.into();
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs, var: var.into() }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    /// Nonzero terms in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    fn check_var(&self, other: &Self) -> Result<(), LaurentError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(LaurentError::VariableMismatch { left: self.var.clone(), right: other.var.clone() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            *out.coeffs.entry(*e).or_insert_with(BigInt::zero) += c;
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                *coeffs.entry(e1 + e2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs, var: self.var.clone() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(), var: self.var.clone() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.var.clone());
        }
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(), var: self.var.clone() }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(), var: self.var.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var.clone());
        for _ in 0..n {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Re-expresses `p(t)` as `p(s^m)` in the new variable `s`.
    pub fn substitute_power(&self, m: i64, new_var: impl Into<String>) -> Result<Self, LaurentError> {
        if m <= 0 {
            return Err(LaurentError::NonPositivePower(m));
        }
        Ok(Self { coeffs: self.coeffs.iter().map(|(e, c)| (e * m, c.clone())).collect(), var: new_var.into() })
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, (e, c)| {
            let base = if *e >= 0 { x.clone() } else { x.recip() };
            let xe: BigRational = Pow::pow(&base, e.unsigned_abs());
            acc + xe * BigRational::from_integer(c.clone())
        })
    }

    /// Checks `coeff(-n) == parity * coeff(n)` for every `n > 0`.
    pub fn check_symmetric(&self, parity: Parity) -> Result<(), LaurentError> {
        let bad = self
            .coeffs
            .keys()
            .map(|e| e.abs())
            .filter(|&n| n > 0)
            .find(|&n| self.coeff(-n) != parity.apply(&self.coeff(n)));
        match bad {
            Some(n) => Err(LaurentError::SymmetryViolation { exponent: n }),
            None => Ok(()),
        }
    }

    pub fn is_symmetric(&self, parity: Parity) -> bool {
        self.check_symmetric(parity).is_ok()
    }

    pub fn to_symmetric(&self, parity: Parity) -> Result<SymmetricForm, LaurentError> {
        self.check_symmetric(parity)?;
        let pairs = self.coeffs.iter().filter(|(e, _)| **e > 0).map(|(e, c)| (*e as u64, c.clone())).collect();
        Ok(SymmetricForm { a0: self.coeff(0), pairs, parity })
    }

    /// Degree `d` and top coefficient `a_d` of a symmetric polynomial.
    pub fn degree_and_top(&self) -> Result<(u64, BigInt), LaurentError> {
        let (e, c) = self.coeffs.iter().next_back().ok_or(LaurentError::ZeroPolynomial)?;
        let parity = if self.is_symmetric(Parity::Plus) { Parity::Plus } else { Parity::Minus };
        self.check_symmetric(parity)?;
        Ok((*e as u64, c.clone()))
    }

    pub fn is_monic(&self) -> Result<bool, LaurentError> {
        let (_, top) = self.degree_and_top()?;
        Ok(top.abs().is_one())
    }

    /// Exact division. Errors unless `divisor` divides `self` with zero
    /// remainder in `Z[t, t^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        self.check_var(divisor)?;
        let (dlo, dhi) = match (divisor.min_exponent(), divisor.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(LaurentError::DivisionByZero),
        };
        let lead = divisor.coeffs[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var.clone());
        while let Some(rhi) = rem.max_exponent() {
            let rlo = rem.min_exponent().unwrap_or(rhi);
            if rhi - rlo < dhi - dlo {
                return Err(LaurentError::InexactDivision);
            }
            let rc = &rem.coeffs[&rhi];
            if !(rc % &lead).is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            let q = Self::monomial(self.var.clone(), rhi - dhi, rc / &lead);
            rem = rem.checked_sub(&q.mul_unchecked(divisor))?;
            quot = quot.checked_add(&q)?;
        }
        Ok(quot)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str(TEXT_SYMBOL)?;
            } else {
                write!(f, "{TEXT_SYMBOL}^{e}")?;
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// Parses the text form into a polynomial in variable `var`.
    pub fn parse(text: &str, var: impl Into<String>) -> Result<Self, LaurentError> {
        let mut parser = TextParser { src: text.as_bytes(), pos: 0 };
        let terms = parser.terms()?;
        Ok(Self::from_terms(var, terms))
    }
}

/// Parsing without a label assigns the variable name `t`.
impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, TEXT_SYMBOL)
    }
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TextParser<'_> {
    fn err<T>(&self, message: &str) -> Result<T, LaurentError> {
        Err(LaurentError::Parse { position: self.pos, message: message.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| core::str::from_utf8(&self.src[start..self.pos]).unwrap_or(""))
    }

    fn symbol(&mut self) -> bool {
        self.skip_ws();
        let sym = TEXT_SYMBOL.as_bytes();
        if self.src[self.pos..].starts_with(sym) {
            self.pos += sym.len();
            true
        } else {
            false
        }
    }

    fn exponent(&mut self) -> Result<i64, LaurentError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let Some(d) = self.digits() else { return self.err("expected exponent digits") };
        let v: i64 = match d.parse() {
            Ok(v) => v,
            Err(_) => return self.err("exponent out of range"),
        };
        Ok(if neg { -v } else { v })
    }

    fn terms(&mut self) -> Result<Vec<(i64, BigInt)>, LaurentError> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.pos == self.src.len() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos == self.src.len() {
                break;
            }
            let negative = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else {
                return self.err("expected `+` or `-`");
            };
            first = false;
            self.skip_ws();
            let coeff = match self.digits() {
                Some(d) => {
                    let c: BigInt = d.parse().map_err(|_| LaurentError::Parse {
                        position: self.pos,
                        message: "bad coefficient".to_string(),
                    })?;
                    Some(c)
                }
                None => None,
            };
            let exp = match coeff {
                Some(_) if self.eat(b'*') => {
                    if !self.symbol() {
                        return self.err("expected variable after `*`");
                    }
                    self.exponent()?
                }
                Some(_) => 0,
                None => {
                    if !self.symbol() {
                        return self.err("expected coefficient or variable");
                    }
                    self.exponent()?
                }
            };
            let c = coeff.unwrap_or_else(BigInt::one);
            out.push((exp, if negative { -c } else { c }));
        }
        Ok(out)
    }
}

/// `a0 + Σ a_n (t^n + parity * t^-n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricForm {
    pub a0: BigInt,
    /// Strictly positive exponents with nonzero coefficients, ascending.
    pub pairs: Vec<(u64, BigInt)>,
    pub parity: Parity,
}

impl SymmetricForm {
    pub fn expand(&self, var: impl Into<String>) -> LaurentPoly {
        let mut terms: Vec<(i64, BigInt)> = Vec::with_capacity(2 * self.pairs.len() + 1);
        terms.push((0, self.a0.clone()));
        for (n, a) in &self.pairs {
            let n = *n as i64;
            terms.push((n, a.clone()));
            terms.push((-n, self.parity.apply(a)));
        }
        LaurentPoly::from_terms(var, terms)
    }
}
