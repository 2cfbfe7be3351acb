//! Comparing a reference list of terms against computed coefficients when
//! the index convention of the reference is not known.
//!
//! Each [`Alignment`] is one hypothesis about which coefficient the `i`-th
//! reference term stands for. A comparison records every term under every
//! hypothesis; a divergence is a finding, not an error.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bfile::BFile;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alignment {
    /// Term `i` is the coefficient of `q^(n0 + 2i)`, where `n0` is the first
    /// exponent with a nonzero coefficient.
    EvenFromFirstNonzero,
    /// Term `i` is the `i`-th nonzero coefficient in increasing exponent.
    NonzeroTerms,
    /// Term `i` is the coefficient of `q^(stride * (offset + i))`.
    Indexed { offset: i64, stride: usize },
}

impl Alignment {
    pub fn describe(&self) -> String {
        match self {
            Self::EvenFromFirstNonzero => {
                "coefficients at successive even n, starting at the first nonzero".to_string()
            }
            Self::NonzeroTerms => "nonzero coefficients in increasing n".to_string(),
            Self::Indexed { offset, stride: 1 } => {
                format!("term with index k is the coefficient at n = k (first index {offset})")
            }
            Self::Indexed { offset, stride } => format!(
                "term with index k is the coefficient at n = {stride}k (first index {offset})"
            ),
        }
    }

    /// Exponents assigned to the first `len` reference terms; `None` where
    /// the computed data does not reach.
    fn exponents(&self, len: usize, computed: &[BigInt]) -> Vec<Option<usize>> {
        match self {
            Self::EvenFromFirstNonzero => match computed.iter().position(|c| !c.is_zero()) {
                Some(start) => (0..len)
                    .map(|i| Some(start + 2 * i).filter(|&n| n < computed.len()))
                    .collect(),
                None => vec![None; len],
            },
            Self::NonzeroTerms => {
                let mut nonzero = computed
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(n, _)| n);
                (0..len).map(|_| nonzero.next()).collect()
            }
            Self::Indexed { offset, stride } => (0..len)
                .map(|i| {
                    let k = offset + i as i64;
                    usize::try_from(k)
                        .ok()
                        .and_then(|k| k.checked_mul(*stride))
                        .filter(|&n| n < computed.len())
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermRecord {
    /// Zero-based position in the reference list.
    pub position: usize,
    pub reference: BigInt,
    pub n: Option<usize>,
    pub computed: Option<BigInt>,
    pub matched: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    FullMatch,
    /// Some but not all terms agree; `first_divergence` is a term position.
    PartialMatch {
        first_divergence: usize,
    },
    NoMatch,
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::FullMatch => "full match",
            Self::PartialMatch { .. } => "partial match",
            Self::NoMatch => "no match",
        }
    }

    pub fn first_divergence(&self) -> Option<usize> {
        match self {
            Self::PartialMatch { first_divergence } => Some(*first_divergence),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PartialMatch { first_divergence } => {
                write!(
                    f,
                    "partial match, first divergence at term {first_divergence}"
                )
            }
            other => f.write_str(other.kind()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub label: String,
    pub alignment: Alignment,
    /// What the computed sequence is, e.g. which generating function.
    pub source: String,
    pub terms: Vec<TermRecord>,
    pub verdict: Verdict,
}

impl Hypothesis {
    pub fn evaluate(
        label: impl Into<String>,
        alignment: Alignment,
        source: impl Into<String>,
        reference: &[BigInt],
        computed: &[BigInt],
    ) -> Self {
        let terms: Vec<TermRecord> = alignment
            .exponents(reference.len(), computed)
            .into_iter()
            .zip(reference)
            .enumerate()
            .map(|(position, (n, r))| {
                let value = n.map(|n| computed[n].clone());
                TermRecord {
                    position,
                    reference: r.clone(),
                    n,
                    matched: value.as_ref() == Some(r),
                    computed: value,
                }
            })
            .collect();
        let verdict = match terms.iter().position(|t| !t.matched) {
            None => Verdict::FullMatch,
            Some(_) if !terms.iter().any(|t| t.matched) => Verdict::NoMatch,
            Some(first_divergence) => Verdict::PartialMatch { first_divergence },
        };
        Self {
            label: label.into(),
            alignment,
            source: source.into(),
            terms,
            verdict,
        }
    }

    pub fn matched(&self) -> usize {
        self.terms.iter().filter(|t| t.matched).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceComparison {
    pub name: String,
    pub hypotheses: Vec<Hypothesis>,
}

impl SequenceComparison {
    pub fn verdicts(&self) -> impl Iterator<Item = (&str, Verdict)> {
        self.hypotheses
            .iter()
            .map(|h| (h.label.as_str(), h.verdict))
    }
}

/// Compares a b-file against computed coefficients under both "index is n"
/// and "index is n/2".
pub fn compare_bfile(
    name: impl Into<String>,
    source: &str,
    bfile: &BFile,
    computed: &[BigInt],
) -> SequenceComparison {
    let hypotheses = [("I1", 1), ("I2", 2)]
        .into_iter()
        .map(|(label, stride)| {
            Hypothesis::evaluate(
                label,
                Alignment::Indexed {
                    offset: bfile.offset,
                    stride,
                },
                source,
                &bfile.values,
                computed,
            )
        })
        .collect();
    SequenceComparison {
        name: name.into(),
        hypotheses,
    }
}
