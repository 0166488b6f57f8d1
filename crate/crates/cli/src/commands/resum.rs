use std::path::PathBuf;

use resum_core::oscillator::calibrate_large_order;
use resum_core::resummer::{describe, resum_eval, LargeOrderBehavior, ResumConfig, SubexponentialPowers};
use resum_core::CouplingPoint;

use crate::coeffile;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::Table;

#[derive(Debug, Clone, Default)]
pub struct ResumArgs {
    pub series: PathBuf,
    pub sigma: Option<f64>,
    pub beta: Option<f64>,
    pub beta_step: f64,
    pub fit: Option<(usize, usize)>,
    pub g: Vec<f64>,
    pub delta: Vec<f64>,
}

fn growth(args: &ResumArgs, column: &[f64], t: &mut Table) -> CliResult<LargeOrderBehavior> {
    match (args.fit, args.sigma, args.beta) {
        (Some(window), None, None) => {
            let c = calibrate_large_order(column, window)?;
            t.note(format!(
                "fit on k in [{}, {}]: sigma = {}, beta = {} (raw sigma = {}, raw beta = {}, rms = {})",
                window.0, window.1, c.sigma, c.beta, c.raw.sigma, c.raw.beta, c.raw.rms_residual
            ));
            Ok(LargeOrderBehavior::new(
                c.sigma,
                SubexponentialPowers::Linear {
                    base: c.beta,
                    step: args.beta_step,
                },
            )?)
        }
        (None, Some(sigma), Some(beta)) => Ok(LargeOrderBehavior::new(
            sigma,
            SubexponentialPowers::Linear {
                base: beta,
                step: args.beta_step,
            },
        )?),
        (Some(_), _, _) => Err(CliError::input("--fit excludes --sigma/--beta")),
        _ => Err(CliError::input("give both --sigma and --beta, or --fit lo,hi")),
    }
}

pub fn run(args: &ResumArgs, cfg: &RunConfig) -> CliResult<Table> {
    let series = coeffile::read(&args.series)?;
    let alpha = cfg
        .alpha
        .ok_or_else(|| CliError::input("resum needs --alpha (or `alpha = ...` in the config)"))?;
    if args.g.is_empty() {
        return Err(CliError::input("resum needs at least one --g value"));
    }
    let mut t = Table::new(&["g", "delta", "resummed", "raw"]);
    let column: Vec<f64> = (0..=series.max_order()).map(|k| series.coefficient(k, 0)).collect();
    let lo = growth(args, &column, &mut t)?;
    let order = cfg.order.unwrap_or(series.max_order());
    let rc = ResumConfig::new(lo, alpha, order).with_quad_tol(cfg.quad_tol);
    rc.validate(&series)?;
    t.note(format!("series = {}, {}", series.label(), describe(&rc)));
    let deltas = if args.delta.is_empty() {
        vec![0.0]
    } else {
        args.delta.clone()
    };
    for &g in &args.g {
        for &d in &deltas {
            let p = CouplingPoint::new(g, d);
            let raw = truncated(&series, p, order);
            t.push(vec![
                g.into(),
                d.into(),
                resum_eval(&series, p, &rc)?.into(),
                raw.into(),
            ]);
        }
    }
    Ok(t)
}

/// Plain partial sum through `g^order`.
fn truncated(s: &resum_core::TruncatedBivariateSeries, p: CouplingPoint, order: usize) -> f64 {
    s.entries()
        .filter(|&(k, _, _)| k <= order)
        .map(|(k, n, c)| c * p.g.powi(k as i32) * p.delta.powi(n as i32))
        .sum()
}
