//! Exact scalar fields.
//!
//! Everything in the crate is generic over [`Field`]. Two implementations
//! ship: [`Rational`] (big rationals) and [`GaussianRational`] (big rationals
//! adjoined `i`). Equality is exact and no operation ever rounds.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;
pub type GaussianRational = Complex<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{input}` as an exact scalar")]
pub struct ParseScalarError {
    pub input: String,
}

/// An exact field of characteristic zero.
pub trait Field: Num + std::ops::Neg<Output = Self> + Clone + Debug + Send + Sync + 'static {
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// The real and imaginary parts, when the field has them. Real fields
    /// report a zero imaginary part.
    fn parts(&self) -> (Rational, Rational);

    fn parse_exact(s: &str) -> Result<Self, ParseScalarError>;

    /// Canonical string: `a/b`, `c/d*i` or `a/b+c/d*i`.
    fn to_exact_string(&self) -> String;

    /// `Some(n)` when the value is a rational integer.
    fn as_integer(&self) -> Option<BigInt> {
        let (re, im) = self.parts();
        (im.is_zero() && re.is_integer()).then(|| re.to_integer())
    }

    /// Integer power; `None` for a negative power of zero.
    fn pow_int(&self, exp: i64) -> Option<Self> {
        if exp < 0 {
            if self.is_zero() {
                return None;
            }
            return (Self::one() / self.clone()).pow_int(-exp);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        Some(acc)
    }
}

fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let s = s.replace('\u{2212}', "-");
    if s.contains('/') {
        let (n, d) = s.split_once('/')?;
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        BigInt::from_str(&s).ok().map(Rational::from_integer)
    }
}

impl Field for Rational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        ratio(numer, denom)
    }

    fn parts(&self) -> (Rational, Rational) {
        (self.clone(), Rational::zero())
    }

    fn parse_exact(s: &str) -> Result<Self, ParseScalarError> {
        parse_rational(s).ok_or_else(|| ParseScalarError { input: s.to_string() })
    }

    fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

impl Field for GaussianRational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Complex::new(ratio(numer, denom), Rational::zero())
    }

    fn parts(&self) -> (Rational, Rational) {
        (self.re.clone(), self.im.clone())
    }

    fn parse_exact(s: &str) -> Result<Self, ParseScalarError> {
        parse_gaussian(s).ok_or_else(|| ParseScalarError { input: s.to_string() })
    }

    fn to_exact_string(&self) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => self.re.to_string(),
            (true, false) => format!("{}*i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                format!("{}{}{}*i", self.re, sign, self.im.abs())
            }
        }
    }
}

fn parse_imaginary(s: &str) -> Option<Rational> {
    let body = s.trim().strip_suffix('i')?.trim_end();
    if let Some(coeff) = body.strip_suffix('*') {
        let coeff = coeff.trim();
        return match coeff {
            "" | "+" | "-" => None,
            _ => parse_rational(coeff.strip_prefix('+').unwrap_or(coeff)),
        };
    }
    match body {
        "" | "+" => Some(Rational::one()),
        "-" => Some(-Rational::one()),
        _ => None,
    }
}

fn parse_gaussian(s: &str) -> Option<GaussianRational> {
    let s = s.trim().replace('\u{2212}', "-");
    if s.is_empty() {
        return None;
    }
    if !s.ends_with('i') {
        return parse_rational(&s).map(|re| Complex::new(re, Rational::zero()));
    }
    // Split at the last sign that is not the leading one.
    let split = s
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    match split {
        Some(at) => {
            let re = parse_rational(&s[..at])?;
            let im = parse_imaginary(&s[at..])?;
            Some(Complex::new(re, im))
        }
        None => parse_imaginary(&s).map(|im| Complex::new(Rational::zero(), im)),
    }
}

/// Shorthand for building field constants in code.
pub fn q<F: Field>(numer: i64, denom: i64) -> F {
    F::from_ratio(numer, denom)
}
