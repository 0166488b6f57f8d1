pub mod emit;
pub mod figure;
pub mod resum;
pub mod scan;
pub mod tables;

use clap::ValueEnum;
use resum_core::fixedpoint::{BetaSystem, DEFAULT_ALPHA_U, DEFAULT_ALPHA_V};
use resum_core::oscillator::OscillatorModel;
use resum_core::pms::PMS_QUAD_TOL;
use resum_core::{load_builtin_beta_tables, TruncatedBivariateSeries};

use crate::coeffile;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

/// Series the commands know how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Om1,
    Om2,
    Om3,
    Om4,
    Zerod,
    Aniso,
    BetaU,
    BetaV,
}

impl ModelArg {
    pub fn oscillator(self) -> Option<OscillatorModel> {
        Some(match self {
            Self::Om1 => OscillatorModel::OmSymmetric { m: 1 },
            Self::Om2 => OscillatorModel::OmSymmetric { m: 2 },
            Self::Om3 => OscillatorModel::OmSymmetric { m: 3 },
            Self::Om4 => OscillatorModel::OmSymmetric { m: 4 },
            Self::Zerod => OscillatorModel::ZeroDimensional,
            Self::Aniso => OscillatorModel::Aniso2d,
            Self::BetaU | Self::BetaV => return None,
        })
    }

    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

pub const G_WEAK: f64 = 0.4;
pub const G_STRONG: f64 = 4.0;
/// PMS coupling for the β-functions.
pub const BETA_PMS_G: f64 = 0.1;

/// `β^u`, `β^v` from the configured files, or the built-in tables.
pub fn beta_tables(cfg: &RunConfig) -> CliResult<(TruncatedBivariateSeries, TruncatedBivariateSeries)> {
    let (mut u, mut v) = load_builtin_beta_tables();
    if let Some(p) = &cfg.beta_u_file {
        u = coeffile::read(p)?;
    }
    if let Some(p) = &cfg.beta_v_file {
        v = coeffile::read(p)?;
    }
    Ok((u, v))
}

pub fn beta_system(cfg: &RunConfig, order: usize) -> CliResult<BetaSystem> {
    let (u, v) = beta_tables(cfg)?;
    for s in [&u, &v] {
        if s.max_order() < order {
            return Err(CliError::input(format!(
                "series `{}` has max_order {} but order {order} is needed",
                s.label(),
                s.max_order()
            )));
        }
    }
    let mut sys = BetaSystem::builtin(order)
        .with_alphas(
            cfg.alpha_u.unwrap_or(DEFAULT_ALPHA_U),
            cfg.alpha_v.unwrap_or(DEFAULT_ALPHA_V),
        )
        .with_quad_tol(cfg.quad_tol);
    sys.beta_u = u;
    sys.beta_v = v;
    Ok(sys)
}

/// Quadrature tolerance for PMS objectives, which are small differences of
/// resummed values.
pub fn pms_quad_tol(cfg: &RunConfig) -> f64 {
    cfg.quad_tol.min(PMS_QUAD_TOL)
}

pub fn fmt_alpha(a: f64) -> String {
    if a == 1.0 / 3.0 {
        "1/3".into()
    } else {
        a.to_string()
    }
}
