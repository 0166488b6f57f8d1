//! Run settings shared by every command.
//!
//! A config file holds `key = value` lines (blank lines and `#` comments are
//! skipped). Command-line flags override the file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use resum_core::fixedpoint::SearchWindow;

use crate::error::{CliError, CliResult};

pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

const KEYS: [&str; 12] = [
    "order",
    "alpha",
    "alpha_u",
    "alpha_v",
    "pms_g",
    "quad_tol",
    "g_window",
    "delta_window",
    "out",
    "json",
    "beta_u_file",
    "beta_v_file",
];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Truncation order; each command has its own default when unset.
    pub order: Option<usize>,
    /// Strong-coupling power for single-series commands.
    pub alpha: Option<f64>,
    pub alpha_u: Option<f64>,
    pub alpha_v: Option<f64>,
    /// Coupling at which PMS objectives are evaluated.
    pub pms_g: Option<f64>,
    pub quad_tol: f64,
    pub g_window: (f64, f64),
    pub delta_window: f64,
    pub out: Option<PathBuf>,
    pub json: bool,
    pub beta_u_file: Option<PathBuf>,
    pub beta_v_file: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let w = SearchWindow::default();
        Self {
            order: None,
            alpha: None,
            alpha_u: None,
            alpha_v: None,
            pms_g: None,
            quad_tol: DEFAULT_QUAD_TOL,
            g_window: (w.g_lo, w.g_hi),
            delta_window: w.delta,
            out: None,
            json: false,
            beta_u_file: None,
            beta_v_file: None,
        }
    }
}

fn parse_f64(key: &str, v: &str) -> CliResult<f64> {
    v.trim()
        .parse()
        .map_err(|_| CliError::input(format!("{key}: `{v}` is not a number")))
}

pub fn parse_pair(key: &str, v: &str) -> CliResult<(f64, f64)> {
    match v.split(',').collect::<Vec<_>>()[..] {
        [a, b] => Ok((parse_f64(key, a)?, parse_f64(key, b)?)),
        _ => Err(CliError::input(format!("{key}: expected `lo,hi`, got `{v}`"))),
    }
}

pub fn parse_list(key: &str, v: &str) -> CliResult<Vec<f64>> {
    v.split(',').map(|x| parse_f64(key, x)).collect()
}

impl RunConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> CliResult<()> {
        let value = value.trim();
        match key {
            "order" => {
                self.order = Some(
                    value
                        .parse()
                        .map_err(|_| CliError::input(format!("order: `{value}` is not a non-negative integer")))?,
                )
            }
            "alpha" => self.alpha = Some(parse_f64(key, value)?),
            "alpha_u" => self.alpha_u = Some(parse_f64(key, value)?),
            "alpha_v" => self.alpha_v = Some(parse_f64(key, value)?),
            "pms_g" => self.pms_g = Some(parse_f64(key, value)?),
            "quad_tol" => self.quad_tol = parse_f64(key, value)?,
            "g_window" => self.g_window = parse_pair(key, value)?,
            "delta_window" => self.delta_window = parse_f64(key, value)?,
            "out" => self.out = Some(PathBuf::from(value)),
            "json" => {
                self.json = match value {
                    "true" | "1" | "yes" => true,
                    "false" | "0" | "no" => false,
                    _ => return Err(CliError::input(format!("json: `{value}` is not a boolean"))),
                }
            }
            "beta_u_file" => self.beta_u_file = Some(PathBuf::from(value)),
            "beta_v_file" => self.beta_v_file = Some(PathBuf::from(value)),
            _ => {
                return Err(CliError::input(format!(
                    "unknown config key `{key}` (known: {})",
                    KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    pub fn merge_file(&mut self, text: &str, path: &Path) -> CliResult<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| CliError::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                msg: "expected `key = value`".into(),
            })?;
            self.set(key.trim(), value).map_err(|e| CliError::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                msg: e.to_string(),
            })?;
        }
        Ok(())
    }

    pub fn search_window(&self) -> SearchWindow {
        SearchWindow {
            g_lo: self.g_window.0,
            g_hi: self.g_window.1,
            delta: self.delta_window,
            ..SearchWindow::default()
        }
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(self.quad_tol > 0.0 && self.quad_tol < 1.0) {
            return Err(CliError::input(format!(
                "quad_tol = {} must lie in (0, 1)",
                self.quad_tol
            )));
        }
        for (key, v) in [
            ("alpha", self.alpha),
            ("alpha_u", self.alpha_u),
            ("alpha_v", self.alpha_v),
        ] {
            if v.is_some_and(|a| !a.is_finite()) {
                return Err(CliError::input(format!("{key} must be finite")));
            }
        }
        if self.pms_g.is_some_and(|g| !(g > 0.0 && g.is_finite())) {
            return Err(CliError::input("pms_g must be positive and finite"));
        }
        self.search_window().validate().map_err(|e| match e {
            resum_core::Error::Domain(msg) => CliError::Input(msg),
            other => CliError::Solver(other),
        })
    }

    /// Every setting in file syntax, `auto` for unset command defaults.
    pub fn entries(&self) -> BTreeMap<&'static str, String> {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "auto".into(), T::to_string)
        }
        fn path(v: &Option<PathBuf>) -> String {
            v.as_ref().map_or_else(|| "none".into(), |p| p.display().to_string())
        }
        BTreeMap::from([
            ("order", opt(&self.order)),
            ("alpha", opt(&self.alpha)),
            ("alpha_u", opt(&self.alpha_u)),
            ("alpha_v", opt(&self.alpha_v)),
            ("pms_g", opt(&self.pms_g)),
            ("quad_tol", self.quad_tol.to_string()),
            ("g_window", format!("{},{}", self.g_window.0, self.g_window.1)),
            ("delta_window", self.delta_window.to_string()),
            ("out", path(&self.out)),
            ("json", self.json.to_string()),
            ("beta_u_file", path(&self.beta_u_file)),
            ("beta_v_file", path(&self.beta_v_file)),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_override() {
        let mut c = RunConfig::default();
        c.merge_file(
            "# comment\norder = 5\n\ng_window = 0.1, 0.9\njson=yes\n",
            Path::new("c"),
        )
        .unwrap();
        assert_eq!(c.order, Some(5));
        assert_eq!(c.g_window, (0.1, 0.9));
        assert!(c.json);
        c.set("order", "6").unwrap();
        assert_eq!(c.order, Some(6));
        c.validate().unwrap();
    }

    #[test]
    fn bad_files_name_the_line() {
        let mut c = RunConfig::default();
        for (text, line) in [
            ("order = 5\nnonsense\n", 2),
            ("\n\nfoo = 1\n", 3),
            ("quad_tol = x\n", 1),
        ] {
            match c.merge_file(text, Path::new("c")) {
                Err(CliError::Parse { line: l, .. }) => assert_eq!(l, line),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn validation() {
        let bad = [
            ("quad_tol", "0"),
            ("quad_tol", "1.5"),
            ("g_window", "0.5,0.1"),
            ("delta_window", "-1"),
            ("pms_g", "0"),
        ];
        for (k, v) in bad {
            let mut c = RunConfig::default();
            c.set(k, v).unwrap();
            assert!(c.validate().is_err(), "{k} = {v}");
        }
    }

    #[test]
    fn entries_cover_every_key() {
        let e = RunConfig::default().entries();
        assert_eq!(e.len(), KEYS.len());
        assert!(KEYS.iter().all(|k| e.contains_key(k)));
    }
}
