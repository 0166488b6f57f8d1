//! Plain-text coefficient tables.
//!
//! ```text
//! # max_order=6
//! # any other comment
//! 1 0 -1
//! 2 0 3.667
//! ```
//!
//! One `k n value` entry per line. The `max_order` header is required and
//! must precede the first entry. Absent entries are zero.

use std::fmt::Write as _;
use std::path::Path;

use resum_core::TruncatedBivariateSeries;

use crate::error::{CliError, CliResult};

pub fn parse(text: &str, path: &Path) -> CliResult<TruncatedBivariateSeries> {
    let err = |line: usize, msg: String| CliError::Parse {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let mut label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "series".into());

    let mut series: Option<TruncatedBivariateSeries> = None;
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix("max_order=") {
                if series.is_some() {
                    return Err(err(line_no, "duplicate max_order header".into()));
                }
                let n: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| err(line_no, format!("bad max_order `{}`", v.trim())))?;
                series = Some(TruncatedBivariateSeries::zeros(label.clone(), n));
            } else if let Some(v) = comment.trim().strip_prefix("label=") {
                label = v.trim().to_string();
                if let Some(s) = series.as_mut() {
                    *s = relabel(s, &label);
                }
            }
            continue;
        }
        let s = series
            .as_mut()
            .ok_or_else(|| err(line_no, "entry before the `# max_order=<N>` header".into()))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(err(
                line_no,
                format!("expected `k n value`, found {} fields", fields.len()),
            ));
        }
        let k: usize = fields[0]
            .parse()
            .map_err(|_| err(line_no, format!("bad order k `{}`", fields[0])))?;
        let n: usize = fields[1]
            .parse()
            .map_err(|_| err(line_no, format!("bad order n `{}`", fields[1])))?;
        let v: f64 = fields[2]
            .parse()
            .map_err(|_| err(line_no, format!("bad value `{}`", fields[2])))?;
        if !seen.insert((k, n)) {
            return Err(err(line_no, format!("duplicate entry ({k}, {n})")));
        }
        s.set(k, n, v).map_err(|e| err(line_no, e.to_string()))?;
    }
    series.ok_or_else(|| err(0, "missing `# max_order=<N>` header (empty file?)".into()))
}

fn relabel(s: &TruncatedBivariateSeries, label: &str) -> TruncatedBivariateSeries {
    TruncatedBivariateSeries::from_entries(label, s.max_order(), s.entries())
        .expect("entries of a valid series stay valid")
}

pub fn read(path: &Path) -> CliResult<TruncatedBivariateSeries> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        context: format!("reading {}", path.display()),
        source,
    })?;
    parse(&text, path)
}

/// Serialises nonzero entries; `f64` display is the shortest string that
/// parses back to the same value.
pub fn write(series: &TruncatedBivariateSeries) -> String {
    let mut out = format!(
        "# max_order={}\n# label={}\n# k n value\n",
        series.max_order(),
        series.label()
    );
    for (k, n, v) in series.entries() {
        let _ = writeln!(out, "{k} {n} {v}");
    }
    out
}
