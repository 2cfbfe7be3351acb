//! Counting and listing partitions under part restrictions.
//!
//! Everything here works directly on parts and never touches the series
//! machinery, so it can serve as an independent check of the generating
//! functions.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Default bound on `n` for [`enumerate`].
pub const DEFAULT_ENUMERATION_CAP: usize = 120;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ordered = parts.windows(2).all(|w| w[0] >= w[1]);
        if !ordered || parts.last() == Some(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the largest part occurs once and equals the sum of the
    /// remaining parts.
    pub fn has_unique_balanced_largest(&self) -> bool {
        match self.0.as_slice() {
            [largest, rest @ ..] => {
                rest.first().is_none_or(|second| second < largest)
                    && rest.iter().sum::<usize>() == *largest
            }
            [] => false,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parts restricted to residues modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueClass {
    modulus: usize,
    residues: BTreeSet<usize>,
}

impl ResidueClass {
    pub fn new(modulus: usize, residues: impl IntoIterator<Item = usize>) -> Result<Self> {
        let residues: BTreeSet<usize> = residues.into_iter().collect();
        if modulus == 0 {
            return Err(Error::InvalidConstraint(
                "modulus must be at least 1".into(),
            ));
        }
        if residues.is_empty() {
            return Err(Error::InvalidConstraint("residue set is empty".into()));
        }
        if let Some(&r) = residues.iter().find(|&&r| r >= modulus) {
            return Err(Error::InvalidConstraint(format!(
                "residue {r} is not below modulus {modulus}"
            )));
        }
        Ok(Self { modulus, residues })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<usize> {
        &self.residues
    }

    pub fn contains(&self, part: usize) -> bool {
        self.residues.contains(&(part % self.modulus))
    }
}

/// Restriction on which parts may appear (and how often).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub distinct: bool,
    pub residues: Option<ResidueClass>,
    pub min_part: usize,
    /// Not needed by the unique-largest-part families, which exclude the
    /// singleton `{l}` by subtraction instead.
    pub max_part: Option<usize>,
}

impl Default for Constraint {
    fn default() -> Self {
        Self::unrestricted()
    }
}

impl Constraint {
    pub fn unrestricted() -> Self {
        Self {
            distinct: false,
            residues: None,
            min_part: 1,
            max_part: None,
        }
    }

    pub fn distinct() -> Self {
        Self {
            distinct: true,
            ..Self::unrestricted()
        }
    }

    pub fn odd() -> Self {
        Self::residues(false, 2, [1])
    }

    pub fn odd_distinct() -> Self {
        Self::residues(true, 2, [1])
    }

    /// Distinct parts congruent to 1 or 2 mod 3.
    pub fn mod3_distinct() -> Self {
        Self::residues(true, 3, [1, 2])
    }

    /// Parts congruent to 1 or 5 mod 6.
    pub fn mod6() -> Self {
        Self::residues(false, 6, [1, 5])
    }

    fn residues<const K: usize>(distinct: bool, modulus: usize, rs: [usize; K]) -> Self {
        Self {
            distinct,
            residues: Some(ResidueClass::new(modulus, rs).expect("valid preset")),
            ..Self::unrestricted()
        }
    }

    pub fn with_min_part(mut self, min_part: usize) -> Self {
        self.min_part = min_part;
        self
    }

    pub fn with_max_part(mut self, max_part: usize) -> Self {
        self.max_part = Some(max_part);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.min_part == 0 {
            return Err(Error::InvalidConstraint(
                "min_part must be at least 1".into(),
            ));
        }
        if self.max_part == Some(0) {
            return Err(Error::InvalidConstraint(
                "max_part must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Whether `part` may appear at all.
    pub fn admits(&self, part: usize) -> bool {
        part >= self.min_part.max(1)
            && self.max_part.is_none_or(|m| part <= m)
            && self.residues.as_ref().is_none_or(|r| r.contains(part))
    }

    /// Allowed part values up to `n`, ascending.
    fn parts_up_to(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=n).filter(|&p| self.admits(p))
    }
}

/// Number of partitions of `m` satisfying `c`, for every `m` in `0..=n`.
///
/// One pass per allowed part value: a 0/1 update for distinct parts,
/// unbounded otherwise.
pub fn count_table(n: usize, c: &Constraint) -> Result<Vec<BigInt>> {
    c.validate()?;
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for p in c.parts_up_to(n) {
        if c.distinct {
            for s in (p..=n).rev() {
                let (lo, hi) = ways.split_at_mut(s);
                if !lo[s - p].is_zero() {
                    hi[0] += &lo[s - p];
                }
            }
        } else {
            for s in p..=n {
                let (lo, hi) = ways.split_at_mut(s);
                if !lo[s - p].is_zero() {
                    hi[0] += &lo[s - p];
                }
            }
        }
    }
    Ok(ways)
}

/// Number of partitions of `n` satisfying `c`; `count(0, _) == 1`.
pub fn count(n: usize, c: &Constraint) -> Result<BigInt> {
    let mut table = count_table(n, c)?;
    Ok(table.swap_remove(n))
}

/// All partitions of `n` satisfying `c`, in lexicographically decreasing
/// order. Fails if `n` exceeds [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate(n: usize, c: &Constraint) -> Result<Vec<Partition>> {
    enumerate_with_cap(n, c, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_with_cap(n: usize, c: &Constraint, cap: usize) -> Result<Vec<Partition>> {
    c.validate()?;
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let allowed: Vec<usize> = c.parts_up_to(n).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(
        n,
        allowed.len(),
        &allowed,
        c.distinct,
        &mut current,
        &mut out,
    );
    Ok(out)
}

/// Extends `current` with parts drawn from `allowed[..limit]`, largest
/// first.
fn descend(
    remaining: usize,
    limit: usize,
    allowed: &[usize],
    distinct: bool,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for idx in (0..limit).rev() {
        let part = allowed[idx];
        if part > remaining {
            continue;
        }
        current.push(part);
        let next_limit = if distinct { idx } else { idx + 1 };
        descend(
            remaining - part,
            next_limit,
            allowed,
            distinct,
            current,
            out,
        );
        current.pop();
    }
}

/// Series whose coefficient of `q^(scale * n)` is `count(n, c)`.
pub fn count_series(c: &Constraint, order: usize, scale: usize) -> Result<TruncatedSeries> {
    if scale == 0 {
        return Err(Error::InvalidScale);
    }
    let table = count_table(order / scale, c)?;
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for (n, v) in table.into_iter().enumerate() {
        coeffs[n * scale] = v;
    }
    TruncatedSeries::from_coeffs(coeffs)
}
