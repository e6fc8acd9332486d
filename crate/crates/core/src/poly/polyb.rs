//! Monomials, polynomials and points for `B = C[b_1, ..., b_k]`.

use std::fmt;

use smallvec::SmallVec;

use super::PolyError;
use crate::field::Field;
use crate::lincomb::LinComb;

/// An exponent tuple `r`, standing for `b^r = b_1^{r_1} ... b_k^{r_k}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Self(exps.into_iter().collect())
    }

    /// The unit monomial in `k` variables.
    pub fn one(k: usize) -> Self {
        Self(smallvec::smallvec![0; k])
    }

    pub fn var(k: usize, i: usize) -> Self {
        let mut m = Self::one(k);
        m.0[i] = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// `|r|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials, `None` when arities differ.
    pub fn mul(&self, other: &Self) -> Option<Self> {
        (self.arity() == other.arity())
            .then(|| Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// All monomials in `k` variables of total degree exactly `d`, lexicographically
    /// descending (so `b_1^d` comes first).
    pub fn of_degree(k: usize, d: u32) -> Vec<Self> {
        fn go(k: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == k {
                prefix.push(d);
                out.push(Monomial::new(prefix.iter().copied()));
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                go(k, d - e, prefix, out);
                prefix.pop();
            }
        }
        if k == 0 {
            return if d == 0 { vec![Self::one(0)] } else { Vec::new() };
        }
        let mut out = Vec::new();
        go(k, d, &mut Vec::new(), &mut out);
        out
    }

    /// All monomials of total degree at most `max_degree`, graded.
    pub fn up_to_degree(k: usize, max_degree: u32) -> Vec<Self> {
        (0..=max_degree).flat_map(|d| Self::of_degree(k, d)).collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// A point `μ` of `C^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointB<F> {
    coords: Vec<F>,
}

impl<F: Field> PointB<F> {
    pub fn new(coords: Vec<F>) -> Self {
        Self { coords }
    }

    pub fn origin(k: usize) -> Self {
        Self { coords: vec![F::zero(); k] }
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    /// `μ^r`.
    pub fn power(&self, r: &Monomial) -> Result<F, PolyError> {
        if r.arity() != self.arity() {
            return Err(PolyError::Dimension { expected: self.arity(), found: r.arity() });
        }
        Ok(self
            .coords
            .iter()
            .zip(r.exps())
            .fold(F::one(), |acc, (m, &e)| acc * m.pow_int(e as i64).expect("non-negative power")))
    }
}

/// A polynomial in `B = C[b_1, ..., b_k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyB<F: Field> {
    arity: usize,
    terms: LinComb<Monomial, F>,
}

impl<F: Field> PolyB<F> {
    pub fn zero(k: usize) -> Self {
        Self { arity: k, terms: LinComb::zero() }
    }

    pub fn constant(k: usize, c: F) -> Self {
        Self::term(Monomial::one(k), c)
    }

    pub fn one(k: usize) -> Self {
        Self::constant(k, F::one())
    }

    pub fn var(k: usize, i: usize) -> Self {
        Self::term(Monomial::var(k, i), F::one())
    }

    pub fn term(m: Monomial, c: F) -> Self {
        Self { arity: m.arity(), terms: LinComb::single(m, c) }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms(
        k: usize,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Result<Self, PolyError> {
        let mut out = Self::zero(k);
        for (m, c) in terms {
            if m.arity() != k {
                return Err(PolyError::Dimension { expected: k, found: m.arity() });
            }
            out.terms.add_term(m, c);
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &LinComb<Monomial, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.arity != other.arity {
            return Err(PolyError::Dimension { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(Self { arity: self.arity, terms: self.terms.clone() + other.terms.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(Self { arity: self.arity, terms: self.terms.clone() - other.terms.clone() })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { arity: self.arity, terms: self.terms.scaled(c) }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut terms = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                terms.add_term(a.mul(b).unwrap(), ca.clone() * cb.clone());
            }
        }
        Ok(Self { arity: self.arity, terms })
    }

    /// Evaluation at a point, the algebra map `η: B → C`.
    pub fn eval(&self, pt: &PointB<F>) -> Result<F, PolyError> {
        if pt.arity() != self.arity {
            return Err(PolyError::Dimension { expected: self.arity, found: pt.arity() });
        }
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            acc = acc + c.clone() * pt.power(m)?;
        }
        Ok(acc)
    }
}

impl<F: Field> fmt::Display for PolyB<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*b{m}", c.to_exact_string())?;
        }
        Ok(())
    }
}

/// Convenience for `poly_eval`.
pub fn poly_eval<F: Field>(p: &PolyB<F>, pt: &PointB<F>) -> Result<F, PolyError> {
    p.eval(pt)
}
