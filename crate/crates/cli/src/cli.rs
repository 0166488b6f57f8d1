use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{emit, figure, resum, scan, tables, ModelArg};
use crate::config::{parse_list, parse_pair, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::write_text;

#[derive(Debug, Parser)]
#[command(name = "resum", version, about = "Resummation of two-variable divergent series")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every command; each overrides the config file.
#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// `key = value` file read before the flags below
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_name = "N")]
    pub order: Option<usize>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha_u: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha_v: Option<f64>,
    /// Coupling at which PMS objectives are evaluated
    #[arg(long, global = true)]
    pub pms_g: Option<f64>,
    #[arg(long, global = true)]
    pub quad_tol: Option<f64>,
    /// Fixed-point search range in g
    #[arg(long, global = true, value_name = "LO,HI")]
    pub g_window: Option<String>,
    /// Largest |delta| considered for zero curves
    #[arg(long, global = true, value_name = "W")]
    pub delta_window: Option<f64>,
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Emit JSON instead of CSV
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce a reference table with deviation columns
    Tables {
        #[arg(value_enum)]
        which: tables::Which,
    },
    /// Data for a figure as (series, x, y) rows
    Figure {
        #[arg(value_enum)]
        which: figure::Which,
    },
    /// Resum a coefficient file at given points
    Resum {
        #[arg(long, value_name = "FILE")]
        series: PathBuf,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        /// beta_n = beta + n * step
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        beta_step: f64,
        /// Fit sigma and beta on the delta^0 column over orders LO..=HI
        #[arg(long, value_name = "LO,HI")]
        fit: Option<String>,
        #[arg(long, value_name = "G[,G...]")]
        g: String,
        #[arg(long, value_name = "D[,D...]", allow_hyphen_values = true)]
        delta: Option<String>,
    },
    /// Scan a PMS objective over alpha
    AlphaScan {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, value_enum, default_value = "ratio")]
        criterion: figure::Criterion,
        #[arg(long, value_name = "LO,HI", allow_hyphen_values = true)]
        range: Option<String>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Write a coefficient table in the plain-text format
    EmitCoefficients {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        k_max: Option<usize>,
    },
}

impl GlobalArgs {
    pub fn resolve(&self) -> CliResult<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                context: format!("reading {}", path.display()),
                source,
            })?;
            cfg.merge_file(&text, path)?;
        }
        macro_rules! over {
            ($($f:ident),*) => {$( if let Some(v) = &self.$f { cfg.$f = Some(v.clone()); } )*};
        }
        over!(order, alpha, alpha_u, alpha_v, pms_g, out);
        if let Some(v) = self.quad_tol {
            cfg.quad_tol = v;
        }
        if let Some(v) = &self.g_window {
            cfg.g_window = parse_pair("g_window", v)?;
        }
        if let Some(v) = self.delta_window {
            cfg.delta_window = v;
        }
        if self.json {
            cfg.json = true;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn command_line(cmd: &Command) -> String {
    match cmd {
        Command::Tables { which } => format!("tables {which:?}").to_lowercase(),
        Command::Figure { which } => format!("figure {which:?}").to_lowercase(),
        Command::Resum { series, .. } => format!("resum {}", series.display()),
        Command::AlphaScan { model, criterion, .. } => {
            format!("alpha-scan {} {criterion:?}", model.name()).to_lowercase()
        }
        Command::EmitCoefficients { model, .. } => format!("emit-coefficients {}", model.name()),
    }
}

pub fn run(cli: &Cli) -> CliResult<()> {
    let cfg = cli.global.resolve()?;
    let name = command_line(&cli.command);
    let table = match &cli.command {
        Command::Tables { which } => tables::run(*which, &cfg)?,
        Command::Figure { which } => figure::run(*which, &cfg)?,
        Command::Resum {
            series,
            sigma,
            beta,
            beta_step,
            fit,
            g,
            delta,
        } => {
            let fit = match fit {
                Some(s) => {
                    let (lo, hi) = parse_pair("fit", s)?;
                    if lo < 0.0 || hi < 0.0 || lo.fract() != 0.0 || hi.fract() != 0.0 {
                        return Err(CliError::input("fit: window bounds must be non-negative integers"));
                    }
                    Some((lo as usize, hi as usize))
                }
                None => None,
            };
            let args = resum::ResumArgs {
                series: series.clone(),
                sigma: *sigma,
                beta: *beta,
                beta_step: *beta_step,
                fit,
                g: parse_list("g", g)?,
                delta: delta
                    .as_deref()
                    .map(|d| parse_list("delta", d))
                    .transpose()?
                    .unwrap_or_default(),
            };
            resum::run(&args, &cfg)?
        }
        Command::AlphaScan {
            model,
            criterion,
            range,
            points,
        } => {
            let args = scan::ScanArgs {
                model: *model,
                criterion: *criterion,
                range: range.as_deref().map(|r| parse_pair("range", r)).transpose()?,
                points: *points,
            };
            scan::run(&args, &cfg)?
        }
        Command::EmitCoefficients { model, k_max } => {
            let s = emit::run(*model, *k_max, &cfg)?;
            return write_text(&crate::coeffile::write(&s), &cfg);
        }
    };
    table.emit(&name, &cfg)
}
