//! Empirical large-order parameters `z_k ~ γ (−σ)^k k! k^β` from generated
//! coefficients.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Largest RMS log-residual accepted by [`estimate_large_order`].
pub const MAX_FIT_RESIDUAL: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LargeOrderFit {
    pub sigma: f64,
    pub beta: f64,
    pub log_prefactor: f64,
    /// RMS of `ln|z_k| − model` over the window.
    pub rms_residual: f64,
    pub window: (usize, usize),
}

fn least_squares(columns: &[&dyn Fn(f64) -> f64], ks: &[usize], ys: &[f64]) -> Result<(Vec<f64>, f64)> {
    let a = DMatrix::from_fn(ks.len(), columns.len(), |i, j| columns[j](ks[i] as f64));
    let b = DVector::from_column_slice(ys);
    let svd = a.clone().svd(true, true);
    let x = svd
        .solve(&b, 1e-12)
        .map_err(|e| Error::Fit(format!("least squares: {e}")))?;
    let r = &a * &x - b;
    let rms = (r.norm_squared() / ks.len() as f64).sqrt();
    Ok((x.iter().copied().collect(), rms))
}

fn check_window(coeffs: &[f64], window: (usize, usize), min_span: usize) -> Result<()> {
    let (lo, hi) = window;
    if lo == 0 || hi >= coeffs.len() || hi < lo + min_span {
        return Err(Error::Fit(format!(
            "window [{lo}, {hi}] needs 1 <= k_lo, k_hi - k_lo >= {min_span}, k_hi < {}",
            coeffs.len()
        )));
    }
    Ok(())
}

fn check_alternating(coeffs: &[f64], (lo, hi): (usize, usize)) -> Result<()> {
    for k in lo..hi {
        let (a, b) = (coeffs[k], coeffs[k + 1]);
        if !(a * b < 0.0) {
            return Err(Error::Fit(format!(
                "coefficient signs do not alternate at k = {k} ({a:e}, {b:e})"
            )));
        }
    }
    Ok(())
}

fn log_reduced(coeffs: &[f64], k: usize) -> f64 {
    coeffs[k].abs().ln() - libm::lgamma(k as f64 + 1.0)
}

/// Least-squares fit of `ln|z_k| − ln k! = c + k ln σ + β ln k` on the
/// inclusive window `k_lo..=k_hi`.
///
/// Fails when signs do not alternate strictly, or when the residual exceeds
/// [`MAX_FIT_RESIDUAL`] (too few or too irregular terms for the law).
pub fn estimate_large_order(coeffs: &[f64], window: (usize, usize)) -> Result<LargeOrderFit> {
    check_window(coeffs, window, 5)?;
    check_alternating(coeffs, window)?;
    let ks: Vec<usize> = (window.0..=window.1).collect();
    let ys: Vec<f64> = ks.iter().map(|&k| log_reduced(coeffs, k)).collect();
    let (x, rms) = least_squares(&[&|_| 1.0, &|k| k, &|k| k.ln()], &ks, &ys)?;
    if !(rms <= MAX_FIT_RESIDUAL) {
        return Err(Error::Fit(format!(
            "RMS log-residual {rms:.3e} above {MAX_FIT_RESIDUAL} on window [{}, {}]",
            window.0, window.1
        )));
    }
    Ok(LargeOrderFit {
        sigma: x[1].exp(),
        beta: x[2],
        log_prefactor: x[0],
        rms_residual: rms,
        window,
    })
}

/// Growth parameters snapped to the values the raw fit points at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibratedGrowth {
    pub sigma: f64,
    pub beta: f64,
    /// `β` from the fixed-σ refit, before snapping.
    pub beta_refit: f64,
    pub raw: LargeOrderFit,
}

/// Nearest `p/q` with `q ≤ 4`, if within 5 %.
fn snap_simple_rational(x: f64) -> Option<f64> {
    let mut best: Option<f64> = None;
    for q in 1..=4 {
        let p = (x * q as f64).round();
        if p < 1.0 {
            continue;
        }
        let cand = p / q as f64;
        if best.is_none_or(|b| (cand - x).abs() < (b - x).abs()) {
            best = Some(cand);
        }
    }
    best.filter(|b| (b - x).abs() <= 0.05 * x)
}

/// Two-stage calibration of the growth law.
///
/// The raw three-parameter fit determines `σ` to a few parts in a thousand,
/// but its `β` absorbs the `1/k` corrections and is off by up to 0.2. So `σ`
/// is snapped to the nearest simple fraction, `β` is refitted at fixed `σ`
/// with `1/k` and `1/k²` corrections, and the result is snapped to the
/// nearest half-integer.
pub fn calibrate_large_order(coeffs: &[f64], window: (usize, usize)) -> Result<CalibratedGrowth> {
    let raw = estimate_large_order(coeffs, window)?;
    let sigma = snap_simple_rational(raw.sigma)
        .ok_or_else(|| Error::Fit(format!("sigma = {} is not close to a simple fraction", raw.sigma)))?;
    let ks: Vec<usize> = (window.0..=window.1).collect();
    let ln_sigma = sigma.ln();
    let ys: Vec<f64> = ks
        .iter()
        .map(|&k| log_reduced(coeffs, k) - k as f64 * ln_sigma)
        .collect();
    let (x, _) = least_squares(&[&|_| 1.0, &|k| k.ln(), &|k| 1.0 / k, &|k| 1.0 / (k * k)], &ks, &ys)?;
    let beta_refit = x[1];
    Ok(CalibratedGrowth {
        sigma,
        beta: (2.0 * beta_refit).round() / 2.0,
        beta_refit,
        raw,
    })
}

/// Growth power of one `δ`-row of a double expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowGrowth {
    pub n: usize,
    /// `β_0 + n`.
    pub assumed: f64,
    /// `β_n − β_0` fitted on a common window, when the row is long enough.
    pub fitted_increment: Option<f64>,
    /// The value handed to the resummer.
    pub used: f64,
}

/// Largest disagreement between assumed and fitted `β_n − β_0` before the
/// fit overrides the assumption.
pub const ROW_GROWTH_TOLERANCE: f64 = 0.3;

/// Row powers `β_n = β_0 + n`, checked against fits of the rows themselves.
///
/// `columns[n][k]` is the coefficient of `g^k δ^n`. For each row with at least
/// six usable orders in the window `[max(3, n+2), k_max]`, `β_n − β_0` is fitted
/// at fixed `σ` on that window for both rows; the difference absorbs the
/// shared subleading corrections. A fitted increment farther than
/// [`ROW_GROWTH_TOLERANCE`] from `n` replaces the assumption.
pub fn row_growth(columns: &[Vec<f64>], sigma: f64, beta0: f64) -> Vec<RowGrowth> {
    let ln_sigma = sigma.ln();
    let fit_beta = |col: &[f64], lo: usize, hi: usize| -> Option<f64> {
        if check_alternating(col, (lo, hi)).is_err() {
            return None;
        }
        let ks: Vec<usize> = (lo..=hi).collect();
        let ys: Vec<f64> = ks.iter().map(|&k| log_reduced(col, k) - k as f64 * ln_sigma).collect();
        least_squares(&[&|_| 1.0, &|k| k.ln()], &ks, &ys)
            .ok()
            .map(|(x, _)| x[1])
    };

    columns
        .iter()
        .enumerate()
        .map(|(n, col)| {
            let assumed = beta0 + n as f64;
            let fitted_increment = if n == 0 {
                None
            } else {
                let lo = (n + 2).max(3);
                let hi = col.len().saturating_sub(1).min(columns[0].len().saturating_sub(1));
                if hi >= lo + 5 {
                    fit_beta(col, lo, hi)
                        .zip(fit_beta(&columns[0], lo, hi))
                        .map(|(b, b0)| b - b0)
                } else {
                    None
                }
            };
            let used = match fitted_increment {
                Some(inc) if (inc - n as f64).abs() > ROW_GROWTH_TOLERANCE => beta0 + inc,
                _ => assumed,
            };
            RowGrowth {
                n,
                assumed,
                fitted_increment,
                used,
            }
        })
        .collect()
}
