//! Exact computation of the colored Alexander invariant of knots presented
//! as braid closures, with two independent evaluation pipelines.

pub mod batch;
pub mod braid;
pub mod error;
pub mod invariant;
pub mod lawrence;
pub mod linalg;
pub mod qrep;
pub mod report;
pub mod ring;
pub mod selfcheck;

pub use error::{AdoError, Result};
