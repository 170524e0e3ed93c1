//! File formats, reports, the verification suite and the `elastica`
//! command line, on top of [`elastica_core`].

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod app;
pub mod error;
pub mod formats;
pub mod report;
pub mod svg;
pub mod verify;

pub use error::CliError;
