use clap::ValueEnum;
use resum_core::fixedpoint::{find_cubic, trace_zero_curve, CurveTag};
use resum_core::oscillator::{exact_reference, OscillatorModel};
use resum_core::pms::{alpha_grid, optimize_alpha, row_judicial, row_ratio, AlphaKind};
use resum_core::resummer::{resum_eval, resum_row_sequence, ResumConfig};
use resum_core::CouplingPoint;

use super::{beta_system, fmt_alpha, pms_quad_tol, G_STRONG, G_WEAK};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    F1a,
    F1b,
    F2,
    F3a,
    F3b,
    F4,
    F5a,
    F5b,
}

pub const ALPHA_RANGE: (f64, f64) = (-1.0, 2.0);
pub const ALPHA_POINTS: usize = 121;
pub const DELTA_POINTS: usize = 41;

pub fn run(which: Which, cfg: &RunConfig) -> CliResult<Table> {
    let om1 = OscillatorModel::OmSymmetric { m: 1 };
    match which {
        Which::F1a => convergence(cfg),
        Which::F1b => sensitivity(om1, Criterion::Judicial, cfg),
        Which::F2 => sensitivity(OscillatorModel::ZeroDimensional, Criterion::Judicial, cfg),
        Which::F3a => sensitivity(om1, Criterion::Ratio, cfg),
        Which::F3b => sensitivity(OscillatorModel::OmSymmetric { m: 2 }, Criterion::Ratio, cfg),
        Which::F4 => anisotropic(cfg),
        Which::F5a => curves(2, cfg),
        Which::F5b => curves(6, cfg),
    }
}

fn triples() -> Table {
    Table::new(&["series", "x", "y"])
}

fn convergence(cfg: &RunConfig) -> CliResult<Table> {
    let model = OscillatorModel::OmSymmetric { m: 1 };
    let order = cfg.order.unwrap_or(9);
    let series = model.series(order)?;
    let lo = model.large_order()?;
    let mut t = triples();
    t.note(format!("quartic oscillator E^(N) at g/4 = {}; x = N", G_WEAK / 4.0));
    for a in [1.0 / 3.0, 0.55, 0.15] {
        let c = ResumConfig::new(lo.clone(), a, order).with_quad_tol(cfg.quad_tol);
        let seq = resum_row_sequence(&series, 0, G_WEAK, &c)?;
        let label = format!("alpha={}", fmt_alpha(a));
        for (n, &e) in seq.iter().enumerate().skip(1) {
            t.push(vec![label.clone().into(), n.into(), e.into()]);
        }
    }
    let exact = exact_reference(&model, G_WEAK, 0.0)?;
    for n in 1..=order {
        t.push(vec!["exact".into(), n.into(), exact.into()]);
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Criterion {
    Judicial,
    Ratio,
}

impl Criterion {
    pub fn default_order(self) -> usize {
        match self {
            Criterion::Judicial => 7,
            Criterion::Ratio => 6,
        }
    }

    pub fn check_order(self, order: usize) -> CliResult<()> {
        let min = match self {
            Criterion::Judicial => 2,
            Criterion::Ratio => 1,
        };
        if order < min {
            return Err(CliError::input(format!("{self:?} criterion needs order >= {min}")));
        }
        Ok(())
    }
}

fn sensitivity(model: OscillatorModel, crit: Criterion, cfg: &RunConfig) -> CliResult<Table> {
    let order = cfg.order.unwrap_or(crit.default_order());
    crit.check_order(order)?;
    let g = cfg.pms_g.unwrap_or(G_WEAK);
    let series = model.series(order.max(9))?;
    let base = ResumConfig::new(model.large_order()?, 0.0, order).with_quad_tol(pms_quad_tol(cfg));
    let objective = |a: f64| {
        let c = base.clone().with_alpha(a);
        match crit {
            Criterion::Judicial => row_judicial(&series, 0, g, &c),
            Criterion::Ratio => row_ratio(&series, 0, g, &c).map(|r| r + 1.0),
        }
    };
    let (label, what) = match crit {
        Criterion::Judicial => (format!("judicial_N{order}"), "judicial function"),
        Criterion::Ratio => (format!("ratio_N{}_N{}", order, order - 1), "ratio E^(N)/E^(N-1)"),
    };
    let mut t = triples();
    t.note(format!("{what} at g = {g}; x = alpha"));
    for a in alpha_grid(ALPHA_RANGE, ALPHA_POINTS) {
        t.push(vec![label.clone().into(), a.into(), objective(a)?.into()]);
    }
    match optimize_alpha(objective, ALPHA_RANGE, ALPHA_POINTS) {
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

pub fn kind_name(k: AlphaKind) -> &'static str {
    match k {
        AlphaKind::Extremum => "extremum",
        AlphaKind::TurningPoint => "turning_point",
    }
}

fn anisotropic(cfg: &RunConfig) -> CliResult<Table> {
    let model = OscillatorModel::Aniso2d;
    let order = cfg.order.unwrap_or(6);
    let series = model.series(order)?;
    let lo = model.large_order()?;
    let deltas = alpha_grid((-1.0, 1.0), DELTA_POINTS);
    let mut t = triples();
    t.note(format!("anisotropic 2-D oscillator E^({order})(delta); x = delta"));
    for g in [G_WEAK, G_STRONG] {
        for a in [1.0 / 3.0, 0.323] {
            let c = ResumConfig::new(lo.clone(), a, order).with_quad_tol(cfg.quad_tol);
            let label = format!("g/4={} alpha={}", g / 4.0, fmt_alpha(a));
            for &d in &deltas {
                let e = resum_eval(&series, CouplingPoint::new(g, d), &c)?;
                t.push(vec![label.clone().into(), d.into(), e.into()]);
            }
        }
        let label = format!("g/4={} exact", g / 4.0);
        for &d in &deltas {
            t.push(vec![
                label.clone().into(),
                d.into(),
                exact_reference(&model, g, d)?.into(),
            ]);
        }
    }
    Ok(t)
}

fn curves(order: usize, cfg: &RunConfig) -> CliResult<Table> {
    if cfg.order.is_some_and(|n| n != order) {
        return Err(CliError::input(format!("this figure is fixed at order {order}")));
    }
    let sys = beta_system(cfg, order)?;
    let w = cfg.search_window();
    let gs = w.g_grid();
    let mut t = triples();
    t.note(format!(
        "zero curves of beta^u and beta^v/delta at N = {order}; x = g, y = delta"
    ));
    for (tag, label) in [(CurveTag::BetaU, "delta_u"), (CurveTag::BetaVNontrivial, "delta_v2")] {
        for (g, d) in trace_zero_curve(&sys, tag, &gs, w.delta)?.samples {
            t.push(vec![label.into(), g.into(), d.into()]);
        }
    }
    match find_cubic(&sys, &w)? {
        Some(fp) => t.note(format!("crossing: g = {}, delta = {}", fp.g_star, fp.delta_star)),
        None => t.note("crossing: none in window"),
    }
    Ok(t)
}
