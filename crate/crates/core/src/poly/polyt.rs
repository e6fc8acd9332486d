//! Dense univariate polynomials in `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyT<F> {
    // coeffs[j] is the coefficient of t^j; no trailing zeros.
    coeffs: Vec<F>,
}

impl<F: Field> PolyT<F> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, F::one())
    }

    pub fn monomial(degree: usize, c: F) -> Self {
        let mut coeffs = vec![F::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `t - root`.
    pub fn linear(root: F) -> Self {
        Self::from_coeffs(vec![-root, F::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> F {
        self.coeffs.get(j).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    /// `f(t - n)`.
    pub fn shift(&self, n: i64) -> Self {
        self.substitute_translate(-F::from_int(n))
    }

    /// `f(t + c)` by Horner's scheme in the ring of polynomials.
    fn substitute_translate(&self, c: F) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let arg = Self::from_coeffs(vec![c, F::one()]);
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Self::constant(a.clone());
        }
        acc
    }

    /// Scaled so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&(F::one() / lead.clone())),
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().cloned().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = rem[shift + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = rem[shift + j].clone() - c.clone() * b.clone();
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.is_zero() || (!self.is_zero() && other.div_rem(self).1.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<F: Field> Add for &PolyT<F> {
    type Output = PolyT<F>;

    fn add(self, rhs: Self) -> PolyT<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyT::from_coeffs((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl<F: Field> Sub for &PolyT<F> {
    type Output = PolyT<F>;

    fn sub(self, rhs: Self) -> PolyT<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyT::from_coeffs((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl<F: Field> Mul for &PolyT<F> {
    type Output = PolyT<F>;

    fn mul(self, rhs: Self) -> PolyT<F> {
        if self.is_zero() || rhs.is_zero() {
            return PolyT::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        PolyT::from_coeffs(out)
    }
}

impl<F: Field> Add for PolyT<F> {
    type Output = PolyT<F>;

    fn add(self, rhs: Self) -> PolyT<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for PolyT<F> {
    type Output = PolyT<F>;

    fn sub(self, rhs: Self) -> PolyT<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for PolyT<F> {
    type Output = PolyT<F>;

    fn mul(self, rhs: Self) -> PolyT<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for PolyT<F> {
    type Output = PolyT<F>;

    fn neg(self) -> PolyT<F> {
        PolyT::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Field> fmt::Debug for PolyT<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyT({self})")
    }
}

impl<F: Field> fmt::Display for PolyT<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = c.to_exact_string();
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Rational};

    fn p(c: &[i64]) -> PolyT<Rational> {
        PolyT::from_coeffs(c.iter().map(|&x| q(x, 1)).collect())
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[0, 1]).shift(1), p(&[-1, 1]));
        assert_eq!(p(&[0, 0, 1]).shift(-2), p(&[4, 4, 1]));
        assert_eq!(p(&[3, -1, 7]).shift(0), p(&[3, -1, 7]));
    }

    #[test]
    fn shift_composes_additively() {
        // Oracle: expand (t-5)^3 + (t-5) by hand: t^3 - 15t^2 + 75t - 125 + t - 5.
        let f = p(&[0, 1, 0, 1]);
        let expected = p(&[-130, 76, -15, 1]);
        assert_eq!(f.shift(2).shift(3), expected);
        assert_eq!(f.shift(5), expected);
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]); // (t-1)(t+2)
        let b = &p(&[-1, 1]) * &p(&[0, 0, 1]); // (t-1)t^2
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (quot, rem) = b.div_rem(&p(&[-1, 1]));
        assert_eq!(quot, p(&[0, 0, 1]));
        assert!(rem.is_zero());
        assert!(p(&[0, 1]).divides(&p(&[0, 3, 1])));
        assert!(!p(&[0, 1]).divides(&p(&[1, 3, 1])));
        assert_eq!(PolyT::<Rational>::zero().gcd(&p(&[2, 4])), p(&[1, 2]).scale(&q(1, 2)).monic());
    }

    #[test]
    fn degree_of_product_is_additive() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 0, 0, 5]);
        assert_eq!((&a * &b).degree(), Some(5));
        assert_eq!(PolyT::<Rational>::zero().degree(), None);
    }
}
