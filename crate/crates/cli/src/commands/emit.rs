use resum_core::TruncatedBivariateSeries;

use super::{beta_tables, ModelArg};
use crate::config::RunConfig;
use crate::error::CliResult;

pub fn run(model: ModelArg, k_max: Option<usize>, cfg: &RunConfig) -> CliResult<TruncatedBivariateSeries> {
    let series = match model.oscillator() {
        Some(m) => m.series(k_max.unwrap_or(9))?,
        None => {
            let (u, v) = beta_tables(cfg)?;
            let s = if model == ModelArg::BetaU { u } else { v };
            match k_max {
                Some(k) if k < s.max_order() => truncate(&s, k),
                Some(k) if k > s.max_order() => {
                    return Err(resum_core::Error::Resource {
                        requested: k,
                        limit: s.max_order(),
                    }
                    .into())
                }
                _ => s,
            }
        }
    };
    Ok(series)
}

fn truncate(s: &TruncatedBivariateSeries, k_max: usize) -> TruncatedBivariateSeries {
    TruncatedBivariateSeries::from_entries(s.label(), k_max, s.entries().filter(|&(k, _, _)| k <= k_max))
        .expect("entries of a valid series stay valid")
}
