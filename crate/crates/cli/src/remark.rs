//! Published terms of the MOD3 and MOD6 sequences, checked against the
//! computed coefficients under several index conventions.

use lampart_core::{genfun_rho, Result, RhoVariant};
use num_bigint::BigInt;

use crate::compare::{Alignment, Hypothesis, SequenceComparison};

/// Published terms for the MOD3 family (distinct parts = 1, 2 mod 3).
pub const MOD3_REFERENCE: [i64; 25] = [
    1, 1, 1, 2, 2, 2, 3, 3, 4, 6, 6, 7, 9, 9, 11, 14, 15, 17, 20, 22, 25, 30, 33, 37, 42,
];

/// Published terms for the MOD6 family (parts = 1, 5 mod 6).
pub const MOD6_REFERENCE: [i64; 25] = [
    1, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 6, 8, 9, 10, 11, 14, 15, 18, 20, 23, 25, 30, 33,
];

pub const DEFAULT_ORDER: usize = 120;

pub fn references() -> [(&'static str, RhoVariant, &'static [i64]); 2] {
    [
        ("Sequence 1", RhoVariant::Mod3, &MOD3_REFERENCE),
        ("Sequence 2", RhoVariant::Mod6, &MOD6_REFERENCE),
    ]
}

/// Runs H1 and H2 against the coefficients of the family's generating
/// function, and H3: H2 applied to the same closed form without its `-1`
/// constant, whose expansion starts with a constant term 1.
pub fn remark_check(order: usize) -> Result<Vec<SequenceComparison>> {
    references()
        .into_iter()
        .map(|(name, variant, reference)| {
            let reference: Vec<BigInt> = reference.iter().map(|&v| BigInt::from(v)).collect();
            let recipe = variant.recipe();
            let computed = recipe.expand(order)?.into_coeffs();
            debug_assert_eq!(computed, genfun_rho(variant, order)?.into_coeffs());
            let mut unshifted = recipe.clone();
            unshifted.constant = 0;
            let raw = unshifted.expand(order)?.into_coeffs();
            let source = format!("{} coefficients of {}", variant.symbol(), recipe);
            let raw_source = format!("coefficients of {unshifted}");
            Ok(SequenceComparison {
                name: format!("{name} ({variant})"),
                hypotheses: vec![
                    Hypothesis::evaluate(
                        "H1",
                        Alignment::EvenFromFirstNonzero,
                        &source,
                        &reference,
                        &computed,
                    ),
                    Hypothesis::evaluate(
                        "H2",
                        Alignment::NonzeroTerms,
                        &source,
                        &reference,
                        &computed,
                    ),
                    Hypothesis::evaluate(
                        "H3",
                        Alignment::NonzeroTerms,
                        raw_source,
                        &reference,
                        &raw,
                    ),
                ],
            })
        })
        .collect()
}
