//! Fixed points of the resummed β-functions and their stability.
//!
//! Both β-functions are resummed row by row in `δ`:
//!
//! ```text
//! β^u(g, δ) = Σ_{n=0..N} B_n^u(g) δ^n        β^v(g, δ) = δ Σ_{n=1..N} B_n^v(g) δ^{n−1}
//! ```
//!
//! so for fixed `g` their zeros in `δ` are roots of polynomials with resummed
//! coefficients. The isotropic point solves `B_0^u(g) = 0`; the cubic point is
//! where the small-`δ` zero curves of `β^u` and of `β^v/δ` cross.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly;
use crate::resummer::{resum_row, LargeOrderBehavior, ResumConfig};
use crate::series::{load_builtin_beta_tables, CouplingPoint, TruncatedBivariateSeries};

/// Default strong-coupling powers of `β^u` and `β^v`.
pub const DEFAULT_ALPHA_U: f64 = 1.348;
pub const DEFAULT_ALPHA_V: f64 = 1.225;

/// `|δ|` beyond which a truncated expansion in `δ` is not trusted.
pub const SMALL_DELTA_TRUST: f64 = 0.1;

/// Largest residual of a zero-curve sample, in units of the polynomial's
/// term magnitudes.
pub const CURVE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaTag {
    U,
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveTag {
    BetaU,
    /// `β^v / δ`, i.e. with the trivial root `δ = 0` removed.
    BetaVNontrivial,
}

/// The pair of β-series together with their resummation settings.
#[derive(Debug, Clone)]
pub struct BetaSystem {
    pub beta_u: TruncatedBivariateSeries,
    pub beta_v: TruncatedBivariateSeries,
    pub cfg_u: ResumConfig,
    pub cfg_v: ResumConfig,
}

impl BetaSystem {
    /// Built-in five-loop tables truncated at `order`, with the default
    /// `α` values.
    pub fn builtin(order: usize) -> Self {
        let (beta_u, beta_v) = load_builtin_beta_tables();
        let lo = LargeOrderBehavior::phi4_cubic();
        Self {
            beta_u,
            beta_v,
            cfg_u: ResumConfig::new(lo.clone(), DEFAULT_ALPHA_U, order),
            cfg_v: ResumConfig::new(lo, DEFAULT_ALPHA_V, order),
        }
    }

    pub fn with_alphas(mut self, alpha_u: f64, alpha_v: f64) -> Self {
        self.cfg_u.alpha = alpha_u;
        self.cfg_v.alpha = alpha_v;
        self
    }

    pub fn with_quad_tol(mut self, tol: f64) -> Self {
        self.cfg_u.quad_rel_tol = tol;
        self.cfg_v.quad_rel_tol = tol;
        self
    }

    pub fn order(&self) -> usize {
        self.cfg_u.order
    }

    fn check(&self) -> Result<()> {
        if self.cfg_u.order != self.cfg_v.order {
            return Err(Error::Domain(alloc::format!(
                "beta^u and beta^v resummed to different orders ({} vs {})",
                self.cfg_u.order,
                self.cfg_v.order
            )));
        }
        self.cfg_u.validate(&self.beta_u)?;
        self.cfg_v.validate(&self.beta_v)
    }

    /// Resummed rows `B_0..=B_N` (for `β^v`, `B_0` is zero).
    pub fn rows(&self, tag: BetaTag, g: f64) -> Result<Vec<f64>> {
        self.check()?;
        let (series, cfg) = match tag {
            BetaTag::U => (&self.beta_u, &self.cfg_u),
            BetaTag::V => (&self.beta_v, &self.cfg_v),
        };
        (0..=cfg.order).map(|n| resum_row(series, n, g, cfg)).collect()
    }

    /// Polynomial in `δ` whose roots form the zero curve `tag` at `g`.
    pub fn curve_polynomial(&self, tag: CurveTag, g: f64) -> Result<Vec<f64>> {
        Ok(match tag {
            CurveTag::BetaU => self.rows(BetaTag::U, g)?,
            CurveTag::BetaVNontrivial => self.rows(BetaTag::V, g)?.split_off(1),
        })
    }
}

/// `β^u(g, δ)` or `β^v(g, δ)` from resummed rows.
pub fn resummed_beta(sys: &BetaSystem, tag: BetaTag, p: CouplingPoint) -> Result<f64> {
    Ok(poly::eval(&sys.rows(tag, p.g)?, p.delta))
}

/// Search windows for fixed points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchWindow {
    pub g_lo: f64,
    pub g_hi: f64,
    /// Only roots with `|δ| ≤ delta` are considered.
    pub delta: f64,
    /// Scan points in `g`.
    pub grid: usize,
}

impl Default for SearchWindow {
    fn default() -> Self {
        Self {
            g_lo: 0.05,
            g_hi: 1.0,
            delta: 0.5,
            grid: 96,
        }
    }
}

impl SearchWindow {
    pub fn validate(&self) -> Result<()> {
        if !(0.0 < self.g_lo && self.g_lo < self.g_hi && self.g_hi.is_finite()) {
            return Err(Error::Domain(alloc::format!(
                "g window ({}, {}) must satisfy 0 < lo < hi",
                self.g_lo,
                self.g_hi
            )));
        }
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(Error::Domain(alloc::format!(
                "delta window {} must be positive",
                self.delta
            )));
        }
        if self.grid < 2 {
            return Err(Error::Domain("g scan needs at least 2 points".into()));
        }
        Ok(())
    }

    pub fn g_grid(&self) -> Vec<f64> {
        (0..self.grid)
            .map(|i| self.g_lo + (self.g_hi - self.g_lo) * i as f64 / (self.grid - 1) as f64)
            .collect()
    }
}

fn roots_in_window(coeffs: &[f64], window: f64) -> Vec<f64> {
    let mut r: Vec<f64> = poly::real_roots(coeffs)
        .into_iter()
        .filter(|d| d.abs() <= window)
        .collect();
    r.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    r
}

/// Real roots in `δ` of the zero curve `tag` at `g` with `|δ| ≤ window`,
/// sorted by `|δ|`.
pub fn delta_roots(sys: &BetaSystem, tag: CurveTag, g: f64, window: f64) -> Result<Vec<f64>> {
    Ok(roots_in_window(&sys.curve_polynomial(tag, g)?, window))
}

/// Sampled zero curve `δ(g)`, taking the real root of smallest `|δ|`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroCurve {
    pub tag: CurveTag,
    /// `(g, δ)`, increasing in `g`; grid points without a root in the window
    /// are skipped.
    pub samples: Vec<(f64, f64)>,
}

fn relative_residual(coeffs: &[f64], x: f64) -> f64 {
    let scale: f64 = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (c * x.powi(i as i32)).abs())
        .sum();
    poly::eval(coeffs, x).abs() / scale.max(f64::MIN_POSITIVE)
}

pub fn trace_zero_curve(sys: &BetaSystem, tag: CurveTag, g_values: &[f64], window: f64) -> Result<ZeroCurve> {
    let mut samples = Vec::new();
    for &g in g_values {
        if let Some(&(g_prev, _)) = samples.last() {
            if !(g > g_prev) {
                return Err(Error::Domain("zero-curve samples must increase in g".into()));
            }
        }
        let coeffs = sys.curve_polynomial(tag, g)?;
        if let Some(&d) = roots_in_window(&coeffs, window).first() {
            let res = relative_residual(&coeffs, d);
            if res > CURVE_TOL {
                return Err(Error::Convergence(alloc::format!(
                    "zero-curve root at g = {g} has relative residual {res:e}"
                )));
            }
            samples.push((g, d));
        }
    }
    Ok(ZeroCurve { tag, samples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedPointKind {
    Isotropic,
    Cubic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint {
    pub g_star: f64,
    pub delta_star: f64,
    pub kind: FixedPointKind,
    pub order: usize,
    /// `β^u` and `β^v` at the point.
    pub residual_u: f64,
    pub residual_v: f64,
}

impl FixedPoint {
    pub fn point(&self) -> CouplingPoint {
        CouplingPoint::new(self.g_star, self.delta_star)
    }

    /// False when `|δ*|` lies outside the range where a truncated expansion
    /// in `δ` is trusted.
    pub fn within_small_delta(&self) -> bool {
        self.delta_star.abs() <= SMALL_DELTA_TRUST
    }
}

/// Relative bracket width at which bisection in `g` stops.
const G_REL_TOL: f64 = 1e-10;

fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    while hi - lo > G_REL_TOL * hi {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn fixed_point(sys: &BetaSystem, g: f64, delta: f64, kind: FixedPointKind) -> Result<FixedPoint> {
    let p = CouplingPoint::new(g, delta);
    Ok(FixedPoint {
        g_star: g,
        delta_star: delta,
        kind,
        order: sys.order(),
        residual_u: resummed_beta(sys, BetaTag::U, p)?,
        residual_v: resummed_beta(sys, BetaTag::V, p)?,
    })
}

/// Isotropic fixed point: the first zero of `B_0^u(g)` in the window.
pub fn find_isotropic(sys: &BetaSystem, window: &SearchWindow) -> Result<FixedPoint> {
    window.validate()?;
    if sys.order() < 2 {
        return Err(Error::Domain("fixed-point search needs order >= 2".into()));
    }
    let b0 = |g: f64| resum_row(&sys.beta_u, 0, g, &sys.cfg_u);
    let grid = window.g_grid();
    let mut prev = (grid[0], b0(grid[0])?);
    for &g in &grid[1..] {
        let cur = b0(g)?;
        if prev.1 == 0.0 {
            return fixed_point(sys, prev.0, 0.0, FixedPointKind::Isotropic);
        }
        if (cur < 0.0) != (prev.1 < 0.0) {
            let g_star = bisect(b0, prev.0, g, prev.1)?;
            return fixed_point(sys, g_star, 0.0, FixedPointKind::Isotropic);
        }
        prev = (g, cur);
    }
    Err(Error::NotFound {
        what: "isotropic fixed point",
        lo: window.g_lo,
        hi: window.g_hi,
    })
}

/// Largest `|δ_u − δ_v|` at a refined crossing; a larger gap means the sign
/// change came from a jump between root branches.
const CROSSING_GAP: f64 = 1e-6;

/// Cubic fixed point: crossing of the smallest-`|δ|` zero curves of `β^u`
/// and `β^v/δ`. `Ok(None)` when they do not cross in the window.
pub fn find_cubic(sys: &BetaSystem, window: &SearchWindow) -> Result<Option<FixedPoint>> {
    window.validate()?;
    if sys.order() < 2 {
        return Err(Error::Domain("fixed-point search needs order >= 2".into()));
    }
    let gap = |g: f64| -> Result<Option<(f64, f64)>> {
        let du = delta_roots(sys, CurveTag::BetaU, g, window.delta)?;
        let dv = delta_roots(sys, CurveTag::BetaVNontrivial, g, window.delta)?;
        Ok(match (du.first(), dv.first()) {
            (Some(&u), Some(&v)) => Some((u - v, u)),
            _ => None,
        })
    };

    let grid = window.g_grid();
    let mut best: Option<(f64, f64)> = None;
    let mut prev: Option<(f64, f64)> = None;
    for &g in &grid {
        let cur = gap(g)?.map(|(d, _)| (g, d));
        if let (Some((g0, d0)), Some((g1, d1))) = (prev, cur) {
            if (d0 < 0.0) != (d1 < 0.0) {
                let diff = |g: f64| -> Result<f64> {
                    gap(g)?.map(|(d, _)| d).ok_or(Error::NotFound {
                        what: "zero curve inside the delta window",
                        lo: g0,
                        hi: g1,
                    })
                };
                if let Ok(g_star) = bisect(diff, g0, g1, d0) {
                    if let Some((d, delta)) = gap(g_star)? {
                        let genuine = d.abs() <= CROSSING_GAP;
                        if genuine && best.is_none_or(|(_, b)| delta.abs() < b.abs()) {
                            best = Some((g_star, delta));
                        }
                    }
                }
            }
        }
        prev = cur;
    }
    best.map(|(g, d)| fixed_point(sys, g, d, FixedPointKind::Cubic))
        .transpose()
}

/// Flow functions in `(g, δ)`: `β^g = β^u + β^v`,
/// `β^δ = [(1−δ)β^v − δβ^u] / g`.
pub fn beta_g_delta(sys: &BetaSystem, p: CouplingPoint) -> Result<(f64, f64)> {
    let u = resummed_beta(sys, BetaTag::U, p)?;
    let v = resummed_beta(sys, BetaTag::V, p)?;
    Ok(flow(p, u, v))
}

fn flow(p: CouplingPoint, u: f64, v: f64) -> (f64, f64) {
    (u + v, ((1.0 - p.delta) * v - p.delta * u) / p.g)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityReport {
    pub fixed_point: FixedPoint,
    /// `[[∂_g β^g, ∂_δ β^g], [∂_g β^δ, ∂_δ β^δ]]`
    pub matrix: [[f64; 2]; 2],
    /// Eigenvalues ordered `b1 ≥ b2`; the common real part for a complex pair.
    pub b1: f64,
    pub b2: f64,
    /// Imaginary part of a complex pair, zero otherwise.
    pub imag: f64,
}

impl StabilityReport {
    pub fn is_complex(&self) -> bool {
        self.imag != 0.0
    }

    /// Both eigenvalues have positive real part.
    pub fn is_stable(&self) -> bool {
        self.b1 > 0.0 && self.b2 > 0.0
    }

    pub fn trace(&self) -> f64 {
        self.matrix[0][0] + self.matrix[1][1]
    }

    pub fn determinant(&self) -> f64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }
}

/// Relative step of the `g` derivative.
pub const DERIVATIVE_STEP: f64 = 1e-3;

/// Eigenvalues of a real 2×2 matrix: `(b1, b2, imag)`, `b1 ≥ b2`.
pub fn eigenvalues_2x2(m: [[f64; 2]; 2]) -> (f64, f64, f64) {
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let half = 0.5 * tr;
    let disc = half * half - det;
    if disc < 0.0 {
        return (half, half, (-disc).sqrt());
    }
    // larger-magnitude root first, the other from the product, avoiding
    // cancellation
    let big = half + half.signum() * disc.sqrt();
    if big == 0.0 {
        return (0.0, 0.0, 0.0);
    }
    let small = det / big;
    if big >= small {
        (big, small, 0.0)
    } else {
        (small, big, 0.0)
    }
}

/// Linearised flow at a fixed point.
///
/// `δ`-derivatives are taken analytically from the row polynomials; `g`
/// derivatives by central differences with step `DERIVATIVE_STEP · g*` and
/// one Richardson extrapolation.
pub fn stability_eigenvalues(sys: &BetaSystem, fp: &FixedPoint) -> Result<StabilityReport> {
    let g = fp.g_star;
    let d = fp.delta_star;

    let ru = sys.rows(BetaTag::U, g)?;
    let rv = sys.rows(BetaTag::V, g)?;
    let (u, du) = poly::eval_with_derivative(&ru, d);
    let (v, dv) = poly::eval_with_derivative(&rv, d);
    let dg_beta_g_ddelta = du + dv;
    let ddelta_beta_delta = (-v + (1.0 - d) * dv - u - d * du) / g;

    let at = |gg: f64| beta_g_delta(sys, CouplingPoint::new(gg, d));
    let central = |h: f64| -> Result<(f64, f64)> {
        let (gp, dp) = at(g + h)?;
        let (gm, dm) = at(g - h)?;
        Ok(((gp - gm) / (2.0 * h), (dp - dm) / (2.0 * h)))
    };
    let h = DERIVATIVE_STEP * g;
    let (a1, c1) = central(h)?;
    let (a2, c2) = central(0.5 * h)?;
    let dg_beta_g = (4.0 * a2 - a1) / 3.0;
    let dg_beta_delta = (4.0 * c2 - c1) / 3.0;

    let matrix = [[dg_beta_g, dg_beta_g_ddelta], [dg_beta_delta, ddelta_beta_delta]];
    let (b1, b2, imag) = eigenvalues_2x2(matrix);
    Ok(StabilityReport {
        fixed_point: *fp,
        matrix,
        b1,
        b2,
        imag,
    })
}
