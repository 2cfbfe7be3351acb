//! Dense truncated power series in `q` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0, ..., q^N`; all arithmetic is performed modulo `q^(N+1)`.
//! Binary operations require both operands to carry the same order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A power series `c_0 + c_1 q + ... + c_N q^N + O(q^(N+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    // Always exactly order + 1 entries.
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The multiplicative identity of the given order.
    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c * q^k`, truncated: if `k > order` the result is zero.
    pub fn monomial(c: impl Into<BigInt>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// Builds a series whose order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().copied().map(BigInt::from).collect())
    }

    /// Highest retained exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`.
    pub fn coefficient(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or(Error::ExponentOutOfRange {
            exponent: k,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies by the binomial `1 + c q^e` (`e >= 1`) in O(N).
    ///
    /// Equivalent to `mul` with the two-term series, but skips the dense
    /// product.
    pub fn mul_binomial(&self, c: &BigInt, e: usize) -> Self {
        assert!(e >= 1, "binomial exponent must be positive");
        let mut out = self.coeffs.clone();
        // Descending so each out[k - e] is still the original coefficient.
        for k in (e..out.len()).rev() {
            let (lo, hi) = out.split_at_mut(k);
            if !lo[k - e].is_zero() {
                hi[0] += c * &lo[k - e];
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !(a0.abs().is_one()) {
            return Err(Error::NonUnitConstant(a0.clone()));
        }
        let n = self.order();
        let mut r: Vec<BigInt> = Vec::with_capacity(n + 1);
        // 1/a0 == a0 for a unit.
        r.push(a0.clone());
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                let ai = &self.coeffs[i];
                if !ai.is_zero() {
                    acc += ai * &r[k - i];
                }
            }
            r.push(-(acc * a0));
        }
        Ok(Self { coeffs: r })
    }

    /// Drops every term above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::TruncationIncrease {
                from: self.order(),
                to: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
