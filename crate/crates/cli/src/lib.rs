//! Library side of the `lampart` command-line tool.

pub mod bfile;
pub mod commands;
pub mod compare;
pub mod remark;
pub mod render;

pub use bfile::{BFile, BFileError};
pub use compare::{Alignment, Hypothesis, SequenceComparison, TermRecord, Verdict};
pub use render::Format;
