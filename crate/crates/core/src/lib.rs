//! Exact computation of the Lah, Stirling and Bell families, the translated
//! Whitney, Whitney-Lah and Dowling numbers, and their q-analogues.
//!
//! Every value is exact: integers and rationals are arbitrary precision and
//! q-values are Laurent polynomials with rational coefficients. The
//! [`verify`] module registers each identity relating these families as a
//! machine-checkable claim.

pub mod arith;
pub mod error;

pub mod classical;
pub mod qcalc;
pub mod qwhitney;
pub mod verify;
pub mod whitney;

pub use error::{Error, Result};
