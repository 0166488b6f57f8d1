//! Truncated double expansions `Σ_k Σ_{n≤k} c_kn g^k δ^n` and the built-in
//! five-loop β-function tables for the cubic-anisotropic φ⁴ theory
//! (M = 3 field components, ε = 1).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{domain, Result};

/// A point in the `(g, δ)` coupling plane, with `g = u + v` and
/// `δ = v / (u + v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingPoint {
    pub g: f64,
    pub delta: f64,
}

impl CouplingPoint {
    pub const fn new(g: f64, delta: f64) -> Self {
        Self { g, delta }
    }

    pub const fn isotropic(g: f64) -> Self {
        Self { g, delta: 0.0 }
    }
}

/// Triangular coefficient table `c_kn`, `0 ≤ n ≤ k ≤ max_order`.
///
/// Entries outside the triangle read as exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedBivariateSeries {
    label: String,
    max_order: usize,
    // packed row-major by k: index k(k+1)/2 + n
    coeffs: Vec<f64>,
}

#[inline]
fn packed(k: usize, n: usize) -> usize {
    k * (k + 1) / 2 + n
}

impl TruncatedBivariateSeries {
    pub fn zeros(label: impl Into<String>, max_order: usize) -> Self {
        Self {
            label: label.into(),
            max_order,
            coeffs: vec![0.0; packed(max_order + 1, 0)],
        }
    }

    /// Builds a table from `(k, n, value)` triples. Later duplicates overwrite
    /// earlier ones.
    pub fn from_entries<I>(label: impl Into<String>, max_order: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut s = Self::zeros(label, max_order);
        for (k, n, v) in entries {
            s.set(k, n, v)?;
        }
        Ok(s)
    }

    /// A single-variable series placed in the `n = 0` column.
    pub fn from_column(label: impl Into<String>, column: &[f64]) -> Result<Self> {
        if column.is_empty() {
            return Err(domain("empty coefficient column"));
        }
        Self::from_entries(
            label,
            column.len() - 1,
            column.iter().enumerate().map(|(k, &v)| (k, 0, v)),
        )
    }

    pub fn set(&mut self, k: usize, n: usize, value: f64) -> Result<()> {
        if n > k || k > self.max_order {
            return Err(domain(alloc::format!(
                "entry ({k}, {n}) outside triangular support of order {}",
                self.max_order
            )));
        }
        if !value.is_finite() {
            return Err(domain(alloc::format!("non-finite coefficient at ({k}, {n})")));
        }
        self.coeffs[packed(k, n)] = value;
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// `c_kn`, or zero outside the triangular support.
    pub fn coefficient(&self, k: usize, n: usize) -> f64 {
        if n > k || k > self.max_order {
            0.0
        } else {
            self.coeffs[packed(k, n)]
        }
    }

    /// True when every `c_kn` with this `n` vanishes.
    pub fn row_is_zero(&self, n: usize) -> bool {
        (n..=self.max_order).all(|k| self.coefficient(k, n) == 0.0)
    }

    /// Nonzero entries in `(k, n)` lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..=self.max_order)
            .flat_map(move |k| (0..=k).map(move |n| (k, n, self.coefficient(k, n))))
            .filter(|&(_, _, v)| v != 0.0)
    }

    /// Direct partial sum `Σ c_kn g^k δ^n` with no resummation.
    pub fn eval_raw(&self, p: CouplingPoint) -> f64 {
        // Horner in g over the δ-polynomials of each order.
        let mut acc = 0.0;
        for k in (0..=self.max_order).rev() {
            let mut inner = 0.0;
            for n in (0..=k).rev() {
                inner = inner * p.delta + self.coefficient(k, n);
            }
            acc = acc * p.g + inner;
        }
        acc
    }
}

const BETA_U_ROWS: [&[f64]; 7] = [
    &[0.0, -1.0, 3.667, -7.667, 47.651, -437.646, 4998.62],
    &[1.0, -5.333, 15.667, -121.767, 1341.05, -17821.1],
    &[1.667, -10.0, 115.885, -1664.86, 27191.0],
    &[2.0, -50.074, 1064.62, -22916.2],
    &[8.305, -350.528, 11183.1],
    &[47.368, -2966.14],
    &[330.76],
];

const BETA_V_ROWS: [&[f64]; 7] = [
    &[],
    &[-1.0, 4.0, -10.778, 75.875, -776.26, 9707.36],
    &[-1.0, 6.222, -67.319, 944.05, -15030.9],
    &[-1.111, 30.211, -639.243, 13549.6],
    &[-6.218, 233.262, -7122.94],
    &[-33.414, 1973.58],
    &[-228.19],
];

fn table_from_rows(label: &str, rows: &[&[f64]; 7]) -> TruncatedBivariateSeries {
    let mut s = TruncatedBivariateSeries::zeros(label, 6);
    for (n, row) in rows.iter().enumerate() {
        // row n = 0 starts at k = 0; every other row starts at k = n
        let k0 = if n == 0 { 0 } else { n };
        for (i, &v) in row.iter().enumerate() {
            s.coeffs[packed(k0 + i, n)] = v;
        }
    }
    s
}

/// The five-loop β^u and β^v expansions (M = 3, ε = 1) in the variables
/// `g = u + v`, `δ = v/(u + v)`, as given to six significant
/// figures.
pub fn load_builtin_beta_tables() -> (TruncatedBivariateSeries, TruncatedBivariateSeries) {
    (
        table_from_rows("beta_u", &BETA_U_ROWS),
        table_from_rows("beta_v", &BETA_V_ROWS),
    )
}
