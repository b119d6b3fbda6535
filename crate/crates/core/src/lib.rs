//! Exact character, Burnside-ring and pre-lambda-ring computations for the
//! motivic classes attached to cubic surfaces and their 27 lines.

pub mod burnside;
pub mod charring;
pub mod chartable;
pub mod error;
pub mod goldens;
pub mod k3lambda;
pub mod lpoly;
pub mod motives;
pub mod relfind;
pub mod report;
pub mod rootsys;
pub mod suite;

pub use error::{Error, Result};
pub use report::{Check, Report};
