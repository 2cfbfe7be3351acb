//! Exact q-series and partition counting for partitions with a unique
//! largest part equal to the sum of the other parts.

pub mod error;
pub mod lambda;
pub mod partitions;
pub mod qfactory;
pub mod series;

pub use error::{Error, Result};
pub use lambda::{
    direct_rho, direct_rho_sequence, genfun_rho, list_lambda, verify, Recipe, RhoVariant,
    VerificationReport,
};
pub use partitions::{count, count_series, enumerate, Constraint, Partition};
pub use qfactory::{geometric, pochhammer, Base, GeometricSpec, PochhammerSpec, QExpression};
pub use series::TruncatedSeries;
