//! Exactly solvable validation models: the O(M) quartic oscillator, the
//! zero-dimensional quartic integral and the anisotropic 2-D oscillator.
//!
//! Couplings follow the `g/4` convention throughout: the interaction is
//! `(g/4)(Σ x_i²)²`, `exp(−x²/2 − g x⁴/4)`, or
//! `(g/4)[x⁴ + 2(1−δ)x²y² + y⁴]`.

pub mod coefficients;
pub mod large_order;
pub mod reference;

use alloc::vec::Vec;

pub use coefficients::{
    aniso2d_coefficients, aniso2d_coefficients_with_axes, om_coefficients, zerod_coefficients, AxisOrder, RationalTable,
};
pub use large_order::{
    calibrate_large_order, estimate_large_order, row_growth, CalibratedGrowth, LargeOrderFit, RowGrowth,
};
pub use reference::exact_reference;

use crate::error::Result;
use crate::resummer::{LargeOrderBehavior, SubexponentialPowers};
use crate::series::TruncatedBivariateSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OscillatorModel {
    OmSymmetric { m: u32 },
    ZeroDimensional,
    Aniso2d,
}

impl OscillatorModel {
    /// Perturbation series up to `g^k_max` (and `δ^k_max` for the 2-D model).
    pub fn series(&self, k_max: usize) -> Result<TruncatedBivariateSeries> {
        match *self {
            Self::OmSymmetric { m } => {
                coefficients::column_series(alloc::format!("om{m}"), &om_coefficients(m, k_max)?)
            }
            Self::ZeroDimensional => coefficients::column_series("zerod", &zerod_coefficients(k_max)?),
            Self::Aniso2d => Ok(aniso2d_coefficients(k_max, k_max)?.to_series("aniso2d")),
        }
    }

    /// Growth law calibrated from long generated series.
    ///
    /// The 2-D model's rows take `σ` and `β_0` from its isotropic column, which
    /// is the O(2) series, and `β_n` from [`row_growth`].
    pub fn large_order(&self) -> Result<LargeOrderBehavior> {
        match *self {
            Self::OmSymmetric { m } => {
                let c = calibrated_om(m)?;
                LargeOrderBehavior::uniform(c.sigma, c.beta)
            }
            Self::ZeroDimensional => {
                let z: Vec<f64> = zerod_coefficients(60)?.iter().map(coefficients::to_f64).collect();
                let c = calibrate_large_order(&z, (20, 50))?;
                LargeOrderBehavior::uniform(c.sigma, c.beta)
            }
            Self::Aniso2d => {
                let c = calibrated_om(2)?;
                let k = coefficients::ANISO_MAX_ORDER;
                let table = aniso2d_coefficients(k, k)?;
                let columns: Vec<Vec<f64>> = (0..=k).map(|n| table.column_f64(n)).collect();
                let betas = row_growth(&columns, c.sigma, c.beta)
                    .into_iter()
                    .map(|r| r.used)
                    .collect();
                LargeOrderBehavior::new(c.sigma, SubexponentialPowers::Explicit(betas))
            }
        }
    }

    /// Value at `g = 0`.
    pub fn free_value(&self) -> f64 {
        match *self {
            Self::OmSymmetric { m } => 0.5 * f64::from(m),
            Self::ZeroDimensional | Self::Aniso2d => 1.0,
        }
    }
}

fn calibrated_om(m: u32) -> Result<CalibratedGrowth> {
    let e: Vec<f64> = om_coefficients(m, 30)?.iter().map(coefficients::to_f64).collect();
    calibrate_large_order(&e, (15, 30))
}
