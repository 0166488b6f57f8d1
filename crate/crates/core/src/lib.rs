//! Borel-type resummation of two-variable divergent perturbation series.
//!
//! The crate is `no_std` (with `alloc`) and contains every numerical piece:
//!
//! * [`series`]: triangular double-expansion tables and the built-in
//!   five-loop β-function coefficients.
//! * [`resummer`]: the reexpansion in Borel-summable basis integrals.
//! * [`pms`]: strong-coupling power selection by minimal sensitivity.
//! * [`fixedpoint`]: isotropic and cubic fixed points and their stability.
//! * [`oscillator`]: exactly solvable validation models.
#![no_std]
// `!(a < b)` is deliberate throughout: NaN must fail the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod fixedpoint;
pub mod oscillator;
pub mod pms;
pub mod poly;
pub mod quadrature;
pub mod resummer;
pub mod series;

pub use error::{Error, Result};
pub use resummer::{LargeOrderBehavior, ResumConfig, SubexponentialPowers};
pub use series::{load_builtin_beta_tables, CouplingPoint, TruncatedBivariateSeries};
