//! Text form of algebra elements: `-4*d(0) + 1/2*C`, `I(2)⊗b[1,1]`,
//! `(1+i)*C_D`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{AlgebraElement, BasisTerm, Generator, JetBasis};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::poly::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse algebra element at byte {at}: {reason}")]
pub struct ParseElementError {
    pub at: usize,
    pub reason: String,
}

impl fmt::Display for BasisTerm<Monomial> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.arity() == 0 {
            write!(f, "{}", self.gen)
        } else {
            write!(f, "{}⊗b{}", self.gen, self.coeff)
        }
    }
}

impl fmt::Display for BasisTerm<JetBasis> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.gen, self.coeff)
    }
}

impl<C: Ord + Clone, F: Field> fmt::Display for LinComb<BasisTerm<C>, F>
where
    BasisTerm<C>: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.iter().enumerate() {
            let (re, im) = c.parts();
            let (negative, body) = if num_traits::Zero::is_zero(&im) {
                let abs = num_traits::Signed::abs(&re);
                let body = if num_traits::One::is_one(&abs) { String::new() } else { format!("{abs}*") };
                (num_traits::Signed::is_negative(&re), body)
            } else {
                (false, format!("({})*", c.to_exact_string()))
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{body}{t}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T, ParseElementError> {
        Err(ParseElementError { at: self.pos, reason: reason.into() })
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let rest = self.rest();
        let len = rest.find(|c: char| !pred(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat("+") {
            Some(false)
        } else if self.eat("-") || self.eat("\u{2212}") {
            Some(true)
        } else {
            None
        }
    }

    fn int(&mut self) -> Result<i64, ParseElementError> {
        self.skip_ws();
        let neg = self.sign() == Some(true);
        let digits = self.take_while(|c| c.is_ascii_digit());
        match digits.parse::<i64>() {
            Ok(n) => Ok(if neg { -n } else { n }),
            Err(_) => self.fail("expected an integer"),
        }
    }

    fn index(&mut self) -> Result<i64, ParseElementError> {
        if !self.eat("(") {
            return self.fail("expected `(`");
        }
        let n = self.int()?;
        self.skip_ws();
        if !self.eat(")") {
            return self.fail("expected `)`");
        }
        Ok(n)
    }

    fn generator(&mut self) -> Result<Generator, ParseElementError> {
        if self.eat("d") {
            Ok(Generator::D(self.index()?))
        } else if self.eat("I") {
            Ok(Generator::I(self.index()?))
        } else if self.eat("C_D") {
            Ok(Generator::CD)
        } else if self.eat("C_I") {
            Ok(Generator::CI)
        } else if self.eat("C") {
            Ok(Generator::C)
        } else {
            self.fail("expected a generator")
        }
    }

    fn monomial(&mut self) -> Result<Monomial, ParseElementError> {
        if !(self.eat("⊗") && self.eat("b") && self.eat("[")) {
            return self.fail("expected `⊗b[`");
        }
        let mut exps = Vec::new();
        loop {
            self.skip_ws();
            if self.eat("]") {
                break;
            }
            if !exps.is_empty() && !self.eat(",") {
                return self.fail("expected `,` or `]`");
            }
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            match digits.parse::<u32>() {
                Ok(e) => exps.push(e),
                Err(_) => return self.fail("expected an exponent"),
            }
        }
        Ok(Monomial::new(exps))
    }

    fn coefficient<F: Field>(&mut self) -> Result<Option<F>, ParseElementError> {
        let start = self.pos;
        let text = if self.eat("(") {
            let body = self.take_while(|c| c != ')');
            if !self.eat(")") {
                return self.fail("unclosed `(`");
            }
            body
        } else {
            let body = self.take_while(|c| c.is_ascii_digit() || c == '/');
            if body.is_empty() {
                return Ok(None);
            }
            body
        };
        self.skip_ws();
        if !self.eat("*") {
            return self.fail("expected `*` after coefficient");
        }
        self.skip_ws();
        match F::parse_exact(text) {
            Ok(v) => Ok(Some(v)),
            Err(_) => Err(ParseElementError { at: start, reason: format!("bad coefficient `{text}`") }),
        }
    }
}

impl FromStr for Generator {
    type Err = ParseElementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s, pos: 0 };
        cur.skip_ws();
        let g = cur.generator()?;
        cur.skip_ws();
        if !cur.rest().is_empty() {
            return cur.fail("trailing input after generator");
        }
        Ok(g)
    }
}

impl<F: Field> FromStr for AlgebraElement<F> {
    type Err = ParseElementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s, pos: 0 };
        cur.skip_ws();
        if cur.rest().trim() == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut arity: Option<usize> = None;
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.rest().is_empty() {
                if first {
                    return cur.fail("empty input");
                }
                break;
            }
            let negative = match cur.sign() {
                Some(neg) => neg,
                None if first => false,
                None => return cur.fail("expected `+` or `-`"),
            };
            first = false;
            cur.skip_ws();
            let coeff = cur.coefficient::<F>()?.unwrap_or_else(F::one);
            let gen = cur.generator()?;
            let mono = if cur.rest().starts_with('⊗') { cur.monomial()? } else { Monomial::one(0) };
            match arity {
                Some(a) if a != mono.arity() => return cur.fail("terms use different numbers of variables"),
                _ => arity = Some(mono.arity()),
            }
            out.add_term(BasisTerm::new(gen, mono), if negative { -coeff } else { coeff });
        }
        Ok(out)
    }
}
