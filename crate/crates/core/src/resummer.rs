//! Borel-type reexpansion of a truncated double series.
//!
//! Each `g`-row `Z_n(g) = Σ_k Z_kn g^k` is rewritten in a basis of
//! Borel-summable integrals `I_pn(g)` whose own expansion grows like the
//! known large-order behaviour `Z_kn ~ (-σ)^k k! k^{β_n}`:
//!
//! ```text
//! Z_n^(N)(g) = Σ_{p=n..N} a_pn I_pn(g)
//! a_pn = Σ_{k=n..p} Z_kn / (b0+1)_k · (4/σ)^k · C(p+k-1-2α, p-k),   b0 = β_n + 3/2
//! ```
//!
//! The basis integral is evaluated after the change of variables
//! `x = 4w / ((1-w)² σ g)`, which maps the boundary layer at `w → 1` to the
//! exponential tail of a Laplace integral:
//!
//! ```text
//! I_pn(g) = Γ(b0+1)⁻¹ ∫_0^∞ x^{b0} e^{-x} w(x)^p (1 - w(x))^{-2α} dx
//! ```
//!
//! and then `x = y²`, which removes the algebraic endpoint singularity for
//! half-integer `b0`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{domain, Error, Result};
use crate::quadrature::{integrate_gaussian_tail, QuadratureOptions};
use crate::series::{CouplingPoint, TruncatedBivariateSeries};

/// Subexponential powers `β_n` of the large-order law.
#[derive(Debug, Clone, PartialEq)]
pub enum SubexponentialPowers {
    /// `β_n = base + step · n`
    Linear { base: f64, step: f64 },
    /// Explicit `β_0, β_1, …`
    Explicit(Vec<f64>),
}

/// Large-order growth `Z_kn ~ γ(n) (-σ)^k k! k^{β_n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LargeOrderBehavior {
    sigma: f64,
    powers: SubexponentialPowers,
}

impl LargeOrderBehavior {
    pub fn new(sigma: f64, powers: SubexponentialPowers) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(domain(alloc::format!("growth scale sigma = {sigma} must be positive")));
        }
        Ok(Self { sigma, powers })
    }

    /// Same `β` for every row.
    pub fn uniform(sigma: f64, beta: f64) -> Result<Self> {
        Self::new(sigma, SubexponentialPowers::Linear { base: beta, step: 0.0 })
    }

    /// The field-theory law for both β-functions: `σ = 1`, `b0(n) = 6 + n`.
    pub fn phi4_cubic() -> Self {
        Self {
            sigma: 1.0,
            powers: SubexponentialPowers::Linear { base: 4.5, step: 1.0 },
        }
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn powers(&self) -> &SubexponentialPowers {
        &self.powers
    }

    pub fn beta(&self, n: usize) -> Option<f64> {
        match &self.powers {
            SubexponentialPowers::Linear { base, step } => Some(base + step * n as f64),
            SubexponentialPowers::Explicit(v) => v.get(n).copied(),
        }
    }

    /// `b0(n) = β_n + 3/2`; must exceed −1.
    pub fn b0(&self, n: usize) -> Result<f64> {
        let beta = self
            .beta(n)
            .ok_or_else(|| domain(alloc::format!("no subexponential power for row n = {n}")))?;
        let b0 = beta + 1.5;
        if !(b0 > -1.0) {
            return Err(domain(alloc::format!("b0({n}) = {b0} must exceed -1")));
        }
        Ok(b0)
    }
}

/// Parameters of one resummation.
#[derive(Debug, Clone, PartialEq)]
pub struct ResumConfig {
    pub alpha: f64,
    pub order: usize,
    pub quad_rel_tol: f64,
    pub large_order: LargeOrderBehavior,
    /// Largest tolerated `max|term| / |a_pn|` before a cancellation diagnostic.
    pub cancellation_limit: f64,
    /// Turn the cancellation diagnostic into [`Error::Cancellation`].
    pub strict_cancellation: bool,
}

impl ResumConfig {
    pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

    pub fn new(large_order: LargeOrderBehavior, alpha: f64, order: usize) -> Self {
        Self {
            alpha,
            order,
            quad_rel_tol: Self::DEFAULT_QUAD_TOL,
            large_order,
            cancellation_limit: 1e6,
            strict_cancellation: false,
        }
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }

    pub fn with_quad_tol(mut self, tol: f64) -> Self {
        self.quad_rel_tol = tol;
        self
    }

    pub fn strict(mut self) -> Self {
        self.strict_cancellation = true;
        self
    }

    pub fn validate(&self, series: &TruncatedBivariateSeries) -> Result<()> {
        if !(self.quad_rel_tol > 0.0 && self.quad_rel_tol < 1.0) {
            return Err(domain(alloc::format!(
                "quadrature tolerance {} outside (0, 1)",
                self.quad_rel_tol
            )));
        }
        if !self.alpha.is_finite() {
            return Err(domain("alpha must be finite"));
        }
        if self.order > series.max_order() {
            return Err(domain(alloc::format!(
                "order {} exceeds series max_order {}",
                self.order,
                series.max_order()
            )));
        }
        Ok(())
    }

    fn quadrature(&self) -> QuadratureOptions {
        QuadratureOptions::relative(self.quad_rel_tol)
    }
}

/// Rising factorial `(c)_k = c (c+1) ⋯ (c+k-1)`; `(c)_0 = 1`.
pub fn pochhammer(c: f64, k: usize) -> f64 {
    if k <= 64 {
        return (0..k).fold(1.0, |acc, j| acc * (c + j as f64));
    }
    // log domain: Γ(c+k)/Γ(c) with sign tracking
    if (0..k).any(|j| c + j as f64 == 0.0) {
        return 0.0;
    }
    let (lg_top, s_top) = libm::lgamma_r(c + k as f64);
    let (lg_bot, s_bot) = libm::lgamma_r(c);
    (s_top * s_bot) as f64 * (lg_top - lg_bot).exp()
}

/// `(c)_k` for use as a divisor: an exact zero factor is a domain error.
pub fn pochhammer_nonzero(c: f64, k: usize) -> Result<f64> {
    let v = pochhammer(c, k);
    if v == 0.0 {
        Err(domain(alloc::format!("pochhammer({c}, {k}) vanishes")))
    } else {
        Ok(v)
    }
}

/// Generalised binomial `C(a, m) = Π_{j=1..m} (a - m + j) / j` for real `a`.
pub fn gen_binomial(a: f64, m: usize) -> f64 {
    (1..=m).fold(1.0, |acc, j| acc * (a - m as f64 + j as f64) / j as f64)
}

/// Reexpansion coefficients `a_pn` for `p = n..=order` of one row.
#[derive(Debug, Clone, PartialEq)]
pub struct RowCoefficients {
    pub n: usize,
    /// `values[i]` is `a_{n+i, n}`.
    pub values: Vec<f64>,
    /// Worst `max|term| / |a_pn|` over the row.
    pub worst_cancellation: f64,
}

impl RowCoefficients {
    pub fn get(&self, p: usize) -> Option<f64> {
        p.checked_sub(self.n).and_then(|i| self.values.get(i).copied())
    }
}

/// Computes `a_pn`, `p = n..=cfg.order`.
pub fn compute_apn(series: &TruncatedBivariateSeries, n: usize, cfg: &ResumConfig) -> Result<RowCoefficients> {
    cfg.validate(series)?;
    if n > cfg.order {
        return Err(domain(alloc::format!("row n = {n} exceeds order {}", cfg.order)));
    }
    let b0 = cfg.large_order.b0(n)?;
    let scale = 4.0 / cfg.large_order.sigma();

    // Z_kn (4/σ)^k / (b0+1)_k, shared by every p
    let mut weighted = Vec::with_capacity(cfg.order + 1 - n);
    for k in n..=cfg.order {
        let z = series.coefficient(k, n);
        let w = if z == 0.0 {
            0.0
        } else {
            z * scale.powi(k as i32) / pochhammer_nonzero(b0 + 1.0, k)?
        };
        weighted.push(w);
    }

    let mut values = Vec::with_capacity(weighted.len());
    let mut worst: f64 = 0.0;
    for p in n..=cfg.order {
        let mut sum = 0.0;
        let mut largest: f64 = 0.0;
        for k in n..=p {
            let term = weighted[k - n] * gen_binomial((p + k) as f64 - 1.0 - 2.0 * cfg.alpha, p - k);
            largest = largest.max(term.abs());
            sum += term;
        }
        if largest > 0.0 {
            let ratio = largest / sum.abs();
            worst = worst.max(ratio);
            if ratio > cfg.cancellation_limit {
                if cfg.strict_cancellation {
                    return Err(Error::Cancellation { p, n, ratio });
                }
                log::warn!(
                    "a_{p},{n}: cancellation ratio {ratio:e} exceeds {:e}",
                    cfg.cancellation_limit
                );
            }
        }
        values.push(sum);
    }
    Ok(RowCoefficients {
        n,
        values,
        worst_cancellation: worst,
    })
}

/// `w(s)` solving `w / (1-w)² = s`, together with `1 - w`.
#[inline]
fn basis_map(s: f64) -> (f64, f64) {
    let root = (4.0 * s + 1.0).sqrt();
    let denom = 2.0 * s + 1.0 + root;
    (2.0 * s / denom, (1.0 + root) / denom)
}

fn check_coupling(g: f64) -> Result<()> {
    if !(g > 0.0 && g.is_finite()) {
        return Err(domain(alloc::format!("coupling g = {g} must be positive")));
    }
    Ok(())
}

/// Basis integral `I_pn(g)`.
pub fn eval_ipn(p: usize, n: usize, g: f64, cfg: &ResumConfig) -> Result<f64> {
    check_coupling(g)?;
    if p < n {
        return Err(domain(alloc::format!("I_pn requires p >= n (p = {p}, n = {n})")));
    }
    let b0 = cfg.large_order.b0(n)?;
    let s_per_x = cfg.large_order.sigma() * g / 4.0;
    let log_norm = libm::lgamma(b0 + 1.0) - core::f64::consts::LN_2;
    let pf = p as f64;
    let two_alpha = 2.0 * cfg.alpha;
    let y_power = 2.0 * b0 + 1.0;

    let integrand = |y: f64| -> f64 {
        if y <= 0.0 {
            return 0.0;
        }
        let x = y * y;
        let (w, one_minus_w) = basis_map(s_per_x * x);
        let mut log_f = y_power * y.ln() - x - log_norm - two_alpha * one_minus_w.ln();
        if p > 0 {
            log_f += pf * w.ln();
        }
        log_f.exp()
    };

    // the weight y^{2b0+1} e^{-y²} peaks at y = sqrt(b0 + 1/2)
    let peak = (b0 + 0.5).max(0.0).sqrt();
    let growth = (b0 + cfg.alpha.max(0.0) + pf).max(0.0).sqrt();
    let core = peak + growth + 6.0;
    let est = integrate_gaussian_tail(integrand, core, 2.0, &cfg.quadrature())?;
    Ok(est.value)
}

/// Resummed row `Z_n^(N)(g)` for `N = n..=cfg.order`; the last entry is the
/// full-order value.
pub fn resum_row_sequence(series: &TruncatedBivariateSeries, n: usize, g: f64, cfg: &ResumConfig) -> Result<Vec<f64>> {
    check_coupling(g)?;
    cfg.validate(series)?;
    if n > cfg.order {
        return Err(domain(alloc::format!("row n = {n} exceeds order {}", cfg.order)));
    }
    let len = cfg.order + 1 - n;
    if series.row_is_zero(n) {
        return Ok(alloc::vec![0.0; len]);
    }
    let apn = compute_apn(series, n, cfg)?;
    let mut out = Vec::with_capacity(len);
    let mut acc = 0.0;
    for (i, &a) in apn.values.iter().enumerate() {
        if a != 0.0 {
            acc += a * eval_ipn(n + i, n, g, cfg)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// `Z_n^(N)(g) = Σ_{p=n..N} a_pn I_pn(g)` with `N = cfg.order`.
pub fn resum_row(series: &TruncatedBivariateSeries, n: usize, g: f64, cfg: &ResumConfig) -> Result<f64> {
    let seq = resum_row_sequence(series, n, g, cfg)?;
    Ok(*seq.last().expect("row sequence is never empty"))
}

/// `Z^(N)(g, δ) = Σ_{n=0..N} Z_n^(N)(g) δ^n`.
pub fn resum_eval(series: &TruncatedBivariateSeries, point: CouplingPoint, cfg: &ResumConfig) -> Result<f64> {
    check_coupling(point.g)?;
    let mut acc = 0.0;
    for n in (0..=cfg.order).rev() {
        let row = resum_row(series, n, point.g, cfg)?;
        acc = acc * point.delta + row;
    }
    Ok(acc)
}

/// Human-readable description of a configuration, used in output headers.
pub fn describe(cfg: &ResumConfig) -> String {
    let powers = match cfg.large_order.powers() {
        SubexponentialPowers::Linear { base, step } => alloc::format!("beta_n={base}+{step}n"),
        SubexponentialPowers::Explicit(v) => alloc::format!("beta_n={v:?}"),
    };
    alloc::format!(
        "alpha={} order={} quad_tol={:e} sigma={} {}",
        cfg.alpha,
        cfg.order,
        cfg.quad_rel_tol,
        cfg.large_order.sigma(),
        powers
    )
}
