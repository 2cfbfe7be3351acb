//! Partitions whose largest part `l` occurs once and equals the sum of the
//! remaining parts (so the total is `2l`).
//!
//! Each [`RhoVariant`] restricts the non-largest parts; the largest part
//! itself is unrestricted. Counts are produced two ways: by counting
//! partitions of `l` directly ([`direct_rho`]) and by expanding a closed
//! form built from Pochhammer products and geometric corrections
//! ([`genfun_rho`]). [`verify`] compares the two.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{self, Constraint, Partition, DEFAULT_ENUMERATION_CAP};
use crate::qfactory::{geometric, pochhammer, Base, GeometricSpec, PochhammerSpec};
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RhoVariant {
    Plain,
    Distinct,
    Odd,
    OddDistinct,
    Mod3,
    Mod6,
}

impl RhoVariant {
    pub const ALL: [RhoVariant; 6] = [
        Self::Plain,
        Self::Distinct,
        Self::Odd,
        Self::OddDistinct,
        Self::Mod3,
        Self::Mod6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Plain => "PLAIN",
            Self::Distinct => "DISTINCT",
            Self::Odd => "ODD",
            Self::OddDistinct => "ODD_DISTINCT",
            Self::Mod3 => "MOD3",
            Self::Mod6 => "MOD6",
        }
    }

    /// Short function name, e.g. `rho_od`.
    pub fn symbol(self) -> &'static str {
        match self {
            Self::Plain => "rho",
            Self::Distinct => "rho_d",
            Self::Odd => "rho_o",
            Self::OddDistinct => "rho_od",
            Self::Mod3 => "rho_3",
            Self::Mod6 => "rho_6",
        }
    }

    /// Restriction on the parts other than the largest.
    pub fn constraint(self) -> Constraint {
        match self {
            Self::Plain => Constraint::unrestricted(),
            Self::Distinct => Constraint::distinct(),
            Self::Odd => Constraint::odd(),
            Self::OddDistinct => Constraint::odd_distinct(),
            Self::Mod3 => Constraint::mod3_distinct(),
            Self::Mod6 => Constraint::mod6(),
        }
    }

    /// Whether the one-part partition `{l}` of `l` satisfies the constraint.
    /// That partition would repeat the largest part, so it is excluded.
    pub fn admits_singleton(self, l: usize) -> bool {
        match self {
            Self::Plain | Self::Distinct => true,
            Self::Odd | Self::OddDistinct => l % 2 == 1,
            Self::Mod3 => !l.is_multiple_of(3),
            Self::Mod6 => matches!(l % 6, 1 | 5),
        }
    }

    /// Closed-form generating function for this family.
    pub fn recipe(self) -> Recipe {
        let poch = |s: &str| s.parse::<PochhammerSpec>().expect("valid recipe");
        let geo = |k, d| GeometricSpec::new(k, d).expect("valid recipe");
        match self {
            Self::Plain => Recipe {
                product: PochhammerSpec::single(Base::Positive, 2, 2).expect("valid recipe"),
                reciprocal: true,
                corrections: vec![Correction::minus(geo(0, 2))],
                constant: 0,
            },
            Self::Distinct => Recipe {
                product: poch("(-q^2;q^2)"),
                reciprocal: false,
                corrections: vec![Correction::minus(geo(0, 2))],
                constant: 0,
            },
            Self::Odd => Recipe {
                product: poch("(q^2;q^4)"),
                reciprocal: true,
                corrections: vec![Correction::minus(geo(2, 4))],
                constant: -1,
            },
            Self::OddDistinct => Recipe {
                product: poch("(-q^2;q^4)"),
                reciprocal: false,
                corrections: vec![Correction::minus(geo(2, 4))],
                constant: -1,
            },
            Self::Mod3 => Recipe {
                product: poch("(-q^2,-q^4;q^6)"),
                reciprocal: false,
                corrections: vec![Correction::minus(geo(2, 2)), Correction::plus(geo(6, 6))],
                // the product's constant term counts the empty partition of 0
                constant: -1,
            },
            Self::Mod6 => Recipe {
                product: poch("(q^2,q^10;q^12)"),
                reciprocal: true,
                corrections: vec![
                    Correction::minus(geo(2, 12)),
                    Correction::minus(geo(10, 12)),
                ],
                constant: -1,
            },
        }
    }

    /// OEIS entry listed alongside this family, if any.
    pub fn oeis_id(self) -> Option<&'static str> {
        match self {
            Self::Plain => Some("A000065"),
            Self::Distinct => Some("A111133"),
            Self::Odd => Some("A357456"),
            Self::OddDistinct => Some("A357457"),
            Self::Mod3 | Self::Mod6 => None,
        }
    }
}

impl fmt::Display for RhoVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RhoVariant {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|v| v.name() == key)
            .ok_or_else(|| Error::UnknownVariant(s.to_string()))
    }
}

/// `±q^k/(1-q^d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Correction {
    pub sign: i8,
    pub term: GeometricSpec,
}

impl Correction {
    pub fn plus(term: GeometricSpec) -> Self {
        Self { sign: 1, term }
    }

    pub fn minus(term: GeometricSpec) -> Self {
        Self { sign: -1, term }
    }
}

/// `P` or `1/P` for a Pochhammer product `P`, plus geometric corrections
/// and an integer constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub product: PochhammerSpec,
    pub reciprocal: bool,
    pub corrections: Vec<Correction>,
    pub constant: i64,
}

impl Recipe {
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        let product = pochhammer(&self.product, order);
        let mut acc = if self.reciprocal {
            product.invert()?
        } else {
            product
        };
        for c in &self.corrections {
            let g = geometric(&c.term, order);
            acc = if c.sign < 0 {
                acc.sub(&g)?
            } else {
                acc.add(&g)?
            };
        }
        if self.constant != 0 {
            acc = acc.add(&TruncatedSeries::monomial(self.constant, 0, order))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reciprocal {
            write!(f, "1/{}", self.product)?;
        } else {
            write!(f, "{}", self.product)?;
        }
        for c in &self.corrections {
            let op = if c.sign < 0 { '-' } else { '+' };
            write!(f, " {op} {}", c.term)?;
        }
        match self.constant {
            0 => Ok(()),
            k if k < 0 => write!(f, " - {}", -k),
            k => write!(f, " + {k}"),
        }
    }
}

/// Number of qualifying partitions of `n`, by direct counting.
pub fn direct_rho(v: RhoVariant, n: usize) -> BigInt {
    if n == 0 || n % 2 == 1 {
        return BigInt::zero();
    }
    let l = n / 2;
    let total = partitions::count(l, &v.constraint()).expect("preset constraints are valid");
    total - singleton_term(v, l)
}

/// `direct_rho(v, n)` for all `n` in `0..=order`, sharing one counting pass.
pub fn direct_rho_sequence(v: RhoVariant, order: usize) -> Vec<BigInt> {
    let table =
        partitions::count_table(order / 2, &v.constraint()).expect("preset constraints are valid");
    (0..=order)
        .map(|n| {
            if n == 0 || n % 2 == 1 {
                BigInt::zero()
            } else {
                &table[n / 2] - singleton_term(v, n / 2)
            }
        })
        .collect()
}

fn singleton_term(v: RhoVariant, l: usize) -> BigInt {
    if v.admits_singleton(l) {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// Expansion of the closed form up to `q^order`.
pub fn genfun_rho(v: RhoVariant, order: usize) -> Result<TruncatedSeries> {
    v.recipe().expand(order)
}

/// The qualifying partitions of `n` (which must be even), each written as
/// `l` followed by a non-singleton partition of `l = n/2`.
pub fn list_lambda(v: RhoVariant, n: usize) -> Result<Vec<Partition>> {
    list_lambda_with_cap(v, n, DEFAULT_ENUMERATION_CAP)
}

pub fn list_lambda_with_cap(v: RhoVariant, n: usize, cap: usize) -> Result<Vec<Partition>> {
    if n % 2 == 1 {
        return Err(Error::OddTotal(n));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let l = n / 2;
    let rest = partitions::enumerate_with_cap(l, &v.constraint(), cap)?;
    rest.into_iter()
        .filter(|p| p.parts() != [l])
        .map(|p| {
            let mut parts = Vec::with_capacity(p.len() + 1);
            parts.push(l);
            parts.extend_from_slice(p.parts());
            Partition::new(parts)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub n: usize,
    pub genfun: BigInt,
    pub direct: BigInt,
    pub equal: bool,
}

/// Coefficient-by-coefficient comparison of the two computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub variant: RhoVariant,
    pub order: usize,
    pub records: Vec<Record>,
}

impl VerificationReport {
    pub fn all_equal(&self) -> bool {
        self.records.iter().all(|r| r.equal)
    }

    pub fn matches(&self) -> usize {
        self.records.iter().filter(|r| r.equal).count()
    }

    pub fn mismatches(&self) -> usize {
        self.records.len() - self.matches()
    }

    pub fn first_mismatch(&self) -> Option<&Record> {
        self.records.iter().find(|r| !r.equal)
    }
}

pub fn verify(v: RhoVariant, order: usize) -> Result<VerificationReport> {
    verify_recipe(v, &v.recipe(), order)
}

/// Like [`verify`] but expands an arbitrary recipe against the direct
/// counts of `v`.
pub fn verify_recipe(v: RhoVariant, recipe: &Recipe, order: usize) -> Result<VerificationReport> {
    let genfun = recipe.expand(order)?.into_coeffs();
    let direct = direct_rho_sequence(v, order);
    let records = genfun
        .into_iter()
        .zip(direct)
        .enumerate()
        .map(|(n, (genfun, direct))| Record {
            n,
            equal: genfun == direct,
            genfun,
            direct,
        })
        .collect();
    Ok(VerificationReport {
        variant: v,
        order,
        records,
    })
}
