pub mod coeff;
pub mod error;
pub mod expr;
pub mod laurent;
pub mod localization;
pub mod reduction;
pub mod report;
pub mod reps;
pub mod ring;
pub mod sample;
pub mod suites;
pub mod symmetries;
pub mod weyl;
pub use error::{Error, Result};
