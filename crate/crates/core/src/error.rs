use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a series needs at least one coefficient")]
    EmptySeries,

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("exponent {exponent} is beyond the series order {order}")]
    ExponentOutOfRange { exponent: usize, order: usize },

    #[error("cannot invert a series whose constant term is {0} (must be 1 or -1)")]
    NonUnitConstant(BigInt),

    #[error("cannot truncate a series of order {from} up to order {to}")]
    TruncationIncrease { from: usize, to: usize },

    #[error("pochhammer factor needs offset >= 1 and step >= 1, got offset {offset}, step {step}")]
    InvalidFactor { offset: usize, step: usize },

    #[error("geometric term needs a period >= 1")]
    InvalidPeriod,

    #[error("cannot parse q-expression {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("unique-largest-part partitions have even totals, got n = {0}")]
    OddTotal(usize),

    #[error("exponent scale must be at least 1")]
    InvalidScale,

    #[error("unknown variant {0:?}")]
    UnknownVariant(String),
}
