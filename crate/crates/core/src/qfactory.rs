//! Builders that expand q-Pochhammer products and geometric terms into
//! [`TruncatedSeries`].
//!
//! A [`PochhammerSpec`] is a list of factors, each denoting an infinite
//! product `(±q^a; q^m)_inf`. Multi-parameter symbols such as
//! `(q^2, q^10; q^12)_inf` are just two factors sharing a step.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Whether the base of a factor is `q^a` or `-q^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `(q^a; q^m)_inf = prod (1 - q^(a + jm))`
    Positive,
    /// `(-q^a; q^m)_inf = prod (1 + q^(a + jm))`
    Negated,
}

/// One parameter of a q-Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochhammerFactor {
    base: Base,
    offset: usize,
    step: usize,
}

impl PochhammerFactor {
    pub fn new(base: Base, offset: usize, step: usize) -> Result<Self> {
        if offset == 0 || step == 0 {
            return Err(Error::InvalidFactor { offset, step });
        }
        Ok(Self { base, offset, step })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn step(&self) -> usize {
        self.step
    }

    /// Exponents `a, a + m, a + 2m, ...` that survive truncation at `order`.
    pub fn exponents(&self, order: usize) -> impl Iterator<Item = usize> {
        (self.offset..=order).step_by(self.step)
    }
}

/// Product of one or more infinite q-Pochhammer factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PochhammerSpec {
    factors: Vec<PochhammerFactor>,
}

impl PochhammerSpec {
    /// The empty product.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(factors: Vec<PochhammerFactor>) -> Self {
        Self { factors }
    }

    /// `(±q^offset; q^step)_inf`.
    pub fn single(base: Base, offset: usize, step: usize) -> Result<Self> {
        Ok(Self::new(vec![PochhammerFactor::new(base, offset, step)?]))
    }

    /// A multi-parameter symbol `(b_1 q^a_1, ..., b_k q^a_k; q^step)_inf`.
    pub fn shared_step(params: &[(Base, usize)], step: usize) -> Result<Self> {
        params
            .iter()
            .map(|&(base, offset)| PochhammerFactor::new(base, offset, step))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn factors(&self) -> &[PochhammerFactor] {
        &self.factors
    }
}

impl fmt::Display for PochhammerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn power(f: &mut fmt::Formatter<'_>, e: usize) -> fmt::Result {
            if e == 1 {
                f.write_str("q")
            } else {
                write!(f, "q^{e}")
            }
        }
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        // Group consecutive factors sharing a step into one symbol.
        let mut i = 0;
        while i < self.factors.len() {
            let step = self.factors[i].step;
            let end = self.factors[i..]
                .iter()
                .position(|x| x.step != step)
                .map_or(self.factors.len(), |p| i + p);
            f.write_str("(")?;
            for (j, factor) in self.factors[i..end].iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                if factor.base == Base::Negated {
                    f.write_str("-")?;
                }
                power(f, factor.offset)?;
            }
            f.write_str(";")?;
            power(f, step)?;
            f.write_str(")_inf")?;
            i = end;
        }
        Ok(())
    }
}

/// `q^numerator / (1 - q^period)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeometricSpec {
    numerator: usize,
    period: usize,
}

impl GeometricSpec {
    pub fn new(numerator: usize, period: usize) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidPeriod);
        }
        Ok(Self { numerator, period })
    }

    pub fn numerator(&self) -> usize {
        self.numerator
    }

    pub fn period(&self) -> usize {
        self.period
    }
}

impl fmt::Display for GeometricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.numerator {
            0 => f.write_str("1")?,
            1 => f.write_str("q")?,
            k => write!(f, "q^{k}")?,
        }
        match self.period {
            1 => f.write_str("/(1-q)"),
            d => write!(f, "/(1-q^{d})"),
        }
    }
}

/// Expands a Pochhammer product up to `q^order`.
///
/// Factors whose lowest exponent exceeds `order` contribute nothing and
/// are skipped.
pub fn pochhammer(spec: &PochhammerSpec, order: usize) -> TruncatedSeries {
    let minus_one = -BigInt::one();
    let plus_one = BigInt::one();
    let mut acc = TruncatedSeries::one(order);
    for factor in &spec.factors {
        let c = match factor.base {
            Base::Positive => &minus_one,
            Base::Negated => &plus_one,
        };
        for e in factor.exponents(order) {
            acc = acc.mul_binomial(c, e);
        }
    }
    acc
}

/// Expands `q^k / (1 - q^d)` up to `q^order`.
pub fn geometric(spec: &GeometricSpec, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::default(); order + 1];
    for e in (spec.numerator..=order).step_by(spec.period) {
        coeffs[e] = BigInt::one();
    }
    TruncatedSeries::from_coeffs(coeffs).expect("order + 1 > 0")
}

/// A standalone q-expression accepted on the command line.
///
/// Grammar (whitespace ignored):
/// `(q^a,-q^b;q^m)` optionally followed by `_inf`, optionally prefixed by
/// `1/`; or a geometric term `q^k/(1-q^d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QExpression {
    Product(PochhammerSpec),
    Reciprocal(PochhammerSpec),
    Geometric(GeometricSpec),
}

impl QExpression {
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        match self {
            Self::Product(spec) => Ok(pochhammer(spec, order)),
            Self::Reciprocal(spec) => pochhammer(spec, order).invert(),
            Self::Geometric(spec) => Ok(geometric(spec, order)),
        }
    }
}

impl fmt::Display for QExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Product(spec) => write!(f, "{spec}"),
            Self::Reciprocal(spec) => write!(f, "1/{spec}"),
            Self::Geometric(spec) => write!(f, "{spec}"),
        }
    }
}

struct Cursor<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            input,
            chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            input: self.input.to_string(),
            reason: reason.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(format!("expected '{c}' at position {}", self.pos))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let want: Vec<char> = s.chars().collect();
        if self.chars[self.pos..].starts_with(&want) {
            self.pos += want.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(format!("expected a number at position {start}"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .or_else(|_| self.fail(format!("number {digits} is too large")))
    }

    /// `q` or `q^k`.
    fn power(&mut self) -> Result<usize> {
        self.expect('q')?;
        if self.eat('^') {
            self.number()
        } else {
            Ok(1)
        }
    }

    fn pochhammer(&mut self) -> Result<PochhammerSpec> {
        self.expect('(')?;
        let mut params = Vec::new();
        loop {
            let base = if self.eat('-') {
                Base::Negated
            } else {
                Base::Positive
            };
            params.push((base, self.power()?));
            if !self.eat(',') {
                break;
            }
        }
        self.expect(';')?;
        let step = self.power()?;
        self.expect(')')?;
        // optional suffix
        let _ = self.eat_str("_inf") || self.eat_str("_\\infty") || self.eat_str("_∞");
        PochhammerSpec::shared_step(&params, step).or_else(|e| self.fail(e.to_string()))
    }

    fn geometric(&mut self) -> Result<GeometricSpec> {
        let numerator = if self.eat('1') { 0 } else { self.power()? };
        self.expect('/')?;
        self.expect('(')?;
        self.expect('1')?;
        self.expect('-')?;
        let period = self.power()?;
        self.expect(')')?;
        GeometricSpec::new(numerator, period).or_else(|e| self.fail(e.to_string()))
    }

    fn finish<T>(&self, value: T) -> Result<T> {
        if self.pos == self.chars.len() {
            Ok(value)
        } else {
            self.fail(format!(
                "unexpected trailing input at position {}",
                self.pos
            ))
        }
    }
}

impl FromStr for PochhammerSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let spec = cur.pochhammer()?;
        cur.finish(spec)
    }
}

impl FromStr for QExpression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let reciprocal_prefix = cur.chars.starts_with(&['1', '/', '(']);
        let expr = if reciprocal_prefix && cur.chars.get(3) != Some(&'1') {
            cur.pos = 2;
            Self::Reciprocal(cur.pochhammer()?)
        } else {
            match cur.peek() {
                Some('(') => Self::Product(cur.pochhammer()?),
                Some('q') | Some('1') => Self::Geometric(cur.geometric()?),
                _ => return cur.fail("expected '(', '1/(' or 'q'"),
            }
        };
        cur.finish(expr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c).unwrap()
    }

    #[test]
    fn euler_function_low_order() {
        let spec = PochhammerSpec::single(Base::Positive, 1, 1).unwrap();
        assert_eq!(pochhammer(&spec, 4), s(&[1, -1, -1, 0, 0]));
    }

    #[test]
    fn distinct_parts_at_even_exponents() {
        let spec = PochhammerSpec::single(Base::Negated, 2, 2).unwrap();
        assert_eq!(pochhammer(&spec, 6), s(&[1, 0, 1, 0, 1, 0, 2]));
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(pochhammer(&PochhammerSpec::empty(), 2), s(&[1, 0, 0]));
    }

    #[test]
    fn factor_validation() {
        assert!(PochhammerFactor::new(Base::Positive, 0, 1).is_err());
        assert!(PochhammerFactor::new(Base::Positive, 1, 0).is_err());
        assert!(GeometricSpec::new(3, 0).is_err());
    }

    #[test]
    fn geometric_terms() {
        let g = |k, d, n| geometric(&GeometricSpec::new(k, d).unwrap(), n);
        assert_eq!(g(0, 2, 5), s(&[1, 0, 1, 0, 1, 0]));
        assert_eq!(g(2, 4, 10), s(&[0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]));
        assert_eq!(g(6, 6, 5), s(&[0; 6]));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "(q;q)_inf",
            "(-q^2;q^2)_inf",
            "(q^2;q^4)_inf",
            "(-q^2,-q^4;q^6)_inf",
            "(q^2,q^10;q^12)_inf",
        ] {
            let spec: PochhammerSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        let spec: PochhammerSpec = " ( q^2 , q^10 ; q^12 ) ".parse().unwrap();
        assert_eq!(spec.factors().len(), 2);
        assert_eq!(spec.factors()[1].offset(), 10);
        assert_eq!(spec.factors()[1].step(), 12);
    }

    #[test]
    fn parse_expressions() {
        let e: QExpression = "1/(q;q)".parse().unwrap();
        assert_eq!(e.expand(5).unwrap(), s(&[1, 1, 2, 3, 5, 7]));
        let e: QExpression = "q^2/(1-q^4)".parse().unwrap();
        assert_eq!(e, QExpression::Geometric(GeometricSpec::new(2, 4).unwrap()));
        let e: QExpression = "1/(1-q^2)".parse().unwrap();
        assert_eq!(e, QExpression::Geometric(GeometricSpec::new(0, 2).unwrap()));
        assert_eq!(e.to_string(), "1/(1-q^2)");
        let e: QExpression = "(-q;q)_inf".parse().unwrap();
        assert_eq!(e.expand(5).unwrap(), s(&[1, 1, 1, 2, 2, 3]));
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "(q;q",
            "(q^0;q)",
            "(q;q^0)",
            "q^2/(1+q)",
            "(q;q)x",
            "(x;q)",
        ] {
            assert!(bad.parse::<QExpression>().is_err(), "{bad:?} should fail");
        }
    }
}
