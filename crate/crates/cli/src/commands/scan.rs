use resum_core::pms::{alpha_grid, optimize_alpha, row_judicial, row_ratio};
use resum_core::resummer::{LargeOrderBehavior, ResumConfig};

use super::figure::{kind_name, Criterion, ALPHA_POINTS, ALPHA_RANGE};
use super::{beta_tables, pms_quad_tol, ModelArg, BETA_PMS_G, G_WEAK};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::Table;

pub const BETA_ALPHA_RANGE: (f64, f64) = (0.5, 2.5);
pub const BETA_ALPHA_POINTS: usize = 101;

#[derive(Debug, Clone)]
pub struct ScanArgs {
    pub model: ModelArg,
    pub criterion: Criterion,
    pub range: Option<(f64, f64)>,
    pub points: Option<usize>,
}

/// `(α, objective)` over a grid plus the PMS choice as a note. A scan
/// without an extremum or turning point is still a valid scan.
pub fn run(args: &ScanArgs, cfg: &RunConfig) -> CliResult<Table> {
    if args.model == ModelArg::Aniso {
        return Err(CliError::input(
            "alpha-scan works on single-row series; aniso is not supported",
        ));
    }
    let order = cfg.order.unwrap_or(args.criterion.default_order());
    args.criterion.check_order(order)?;
    let tol = pms_quad_tol(cfg);
    let (series, row, lo, g, range, points) = match args.model.oscillator() {
        Some(m) => (
            m.series(order.max(9))?,
            0,
            m.large_order()?,
            cfg.pms_g.unwrap_or(G_WEAK),
            ALPHA_RANGE,
            ALPHA_POINTS,
        ),
        None => {
            let (u, v) = beta_tables(cfg)?;
            let (s, row) = if args.model == ModelArg::BetaU { (u, 0) } else { (v, 1) };
            let g = cfg.pms_g.unwrap_or(BETA_PMS_G);
            (
                s,
                row,
                LargeOrderBehavior::phi4_cubic(),
                g,
                BETA_ALPHA_RANGE,
                BETA_ALPHA_POINTS,
            )
        }
    };
    let range = args.range.unwrap_or(range);
    let points = args.points.unwrap_or(points);
    if points < 16 {
        return Err(CliError::input("alpha-scan needs at least 16 points"));
    }
    let base = ResumConfig::new(lo, 0.0, order).with_quad_tol(tol);
    base.validate(&series)?;
    let objective = |a: f64| {
        let c = base.clone().with_alpha(a);
        match args.criterion {
            Criterion::Judicial => row_judicial(&series, row, g, &c),
            Criterion::Ratio => row_ratio(&series, row, g, &c),
        }
    };

    let mut t = Table::new(&["alpha", "objective"]);
    t.note(format!(
        "model = {}, criterion = {:?}, row = {row}, g = {g}, order = {order}",
        args.model.name(),
        args.criterion
    ));
    for a in alpha_grid(range, points) {
        t.push(vec![a.into(), objective(a)?.into()]);
    }
    match optimize_alpha(objective, range, points) {
        Ok(c) => t.note(format!(
            "pms: alpha = {}, kind = {}, value = {}",
            c.alpha,
            kind_name(c.kind),
            c.objective_value
        )),
        Err(resum_core::Error::NotFound { .. }) => t.note("pms: no extremum or turning point in range"),
        Err(e) => return Err(e.into()),
    }
    Ok(t)
}
