//! Std companion to `bottsym-core`: the parallel census over all matrices of
//! a size, the matrix file format, JSON and text reports, and the
//! `bottsym` command-line tool.

pub mod census;
pub mod cli;
pub mod document;
pub mod report;

pub use census::{census, cross_validate, list_symplectic, CensusOptions, CensusReport};
pub use document::MatrixDocument;
pub use report::ReportDocument;
