//! Choice of the strong-coupling power `α` by minimal sensitivity.

use alloc::vec::Vec;

use crate::error::{domain, Error, Result};
use crate::resummer::{resum_row_sequence, ResumConfig};
use crate::series::TruncatedBivariateSeries;

/// Quadrature tolerance for PMS scans. The objectives are differences of
/// nearly equal resummed values, so they need more digits than a plain
/// evaluation.
pub const PMS_QUAD_TOL: f64 = 1e-12;

/// Objective magnitude treated as an exact zero (a cusp at the exact `α`).
pub const CUSP_LEVEL: f64 = 1e-12;

/// Second differences below this fraction of `max|f|` count as zero.
pub const CURVATURE_NOISE: f64 = 1e-12;

/// Target width of the refined `α` bracket.
pub const ALPHA_TOL: f64 = 1e-5;

/// Judicial function
/// `Δ = √[(E_{N−1} − E_{N−2})² + (E_N − 2E_{N−1} + E_{N−2})²] / E_{N−2}`,
/// with `e_seq[N]` holding `E^(N)`.
pub fn judicial_delta(e_seq: &[f64], n_s: usize) -> Result<f64> {
    if n_s < 2 || n_s >= e_seq.len() {
        return Err(domain(alloc::format!(
            "judicial function at N_s = {n_s} needs orders N_s-2..N_s (have 0..{})",
            e_seq.len() as isize - 1
        )));
    }
    let (e2, e1, e0) = (e_seq[n_s - 2], e_seq[n_s - 1], e_seq[n_s]);
    if e2 == 0.0 {
        return Err(domain("judicial function with E^(N_s-2) = 0"));
    }
    let slope = e1 - e2;
    let curvature = e0 - 2.0 * e1 + e2;
    Ok(libm::hypot(slope, curvature) / e2)
}

/// `e_hi / e_lo − 1`.
pub fn ratio_delta(e_hi: f64, e_lo: f64) -> Result<f64> {
    if e_lo == 0.0 {
        return Err(domain("ratio criterion with zero denominator"));
    }
    Ok(e_hi / e_lo - 1.0)
}

/// Judicial function of row `n` at `cfg.order`.
pub fn row_judicial(series: &TruncatedBivariateSeries, n: usize, g: f64, cfg: &ResumConfig) -> Result<f64> {
    let seq = resum_row_sequence(series, n, g, cfg)?;
    // seq[i] is the order n + i
    let mut by_order = alloc::vec![0.0; n];
    by_order.extend_from_slice(&seq);
    judicial_delta(&by_order, cfg.order)
}

/// `Z_n^(N) / Z_n^(N−1) − 1` of row `n` at `N = cfg.order`.
pub fn row_ratio(series: &TruncatedBivariateSeries, n: usize, g: f64, cfg: &ResumConfig) -> Result<f64> {
    if cfg.order < n + 1 {
        return Err(domain(alloc::format!(
            "ratio criterion on row {n} needs order >= {}",
            n + 1
        )));
    }
    let seq = resum_row_sequence(series, n, g, cfg)?;
    let len = seq.len();
    ratio_delta(seq[len - 1], seq[len - 2])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaKind {
    Extremum,
    TurningPoint,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaChoice {
    pub alpha: f64,
    pub kind: AlphaKind,
    pub objective_value: f64,
    pub scan_range: (f64, f64),
}

/// Uniform grid `lo + (hi − lo) i / (n − 1)`.
pub fn alpha_grid(range: (f64, f64), points: usize) -> Vec<f64> {
    let (lo, hi) = range;
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

/// How to choose among several interior extrema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtremumRule {
    /// Smallest second difference, i.e. the least `α`-sensitive plateau.
    #[default]
    Flattest,
    /// Smallest `|objective|`.
    SmallestObjective,
}

/// [`optimize_alpha_with`] using [`ExtremumRule::Flattest`].
pub fn optimize_alpha<F>(objective: F, range: (f64, f64), grid_points: usize) -> Result<AlphaChoice>
where
    F: FnMut(f64) -> Result<f64>,
{
    optimize_alpha_with(objective, range, grid_points, ExtremumRule::default())
}

/// Scans `objective` over `range` and picks the least sensitive `α`.
///
/// Preference order: a grid point where the objective vanishes to
/// [`CUSP_LEVEL`] at a local minimum of `|f|` (ties go to the smaller `α`);
/// then an interior extremum of `f` that is a local minimum of `|f|`, chosen
/// by `rule` and refined by golden section; otherwise the sign change of the
/// second difference with the smallest `|f'|`, refined by bisection on the
/// second difference.
pub fn optimize_alpha_with<F>(
    mut objective: F,
    range: (f64, f64),
    grid_points: usize,
    rule: ExtremumRule,
) -> Result<AlphaChoice>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (lo, hi) = range;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(domain(alloc::format!("empty alpha range [{lo}, {hi}]")));
    }
    if grid_points < 16 {
        return Err(domain(alloc::format!(
            "alpha scan needs at least 16 points, got {grid_points}"
        )));
    }
    let xs = alpha_grid(range, grid_points);
    let fs: Vec<f64> = xs.iter().map(|&a| objective(a)).collect::<Result<_>>()?;
    let step = (hi - lo) / (grid_points - 1) as f64;
    let choice = |alpha: f64, kind: AlphaKind, objective_value: f64| AlphaChoice {
        alpha,
        kind,
        objective_value,
        scan_range: range,
    };

    let interior = 1..grid_points - 1;
    let local_min_abs = |i: usize| fs[i].abs() <= fs[i - 1].abs() && fs[i].abs() <= fs[i + 1].abs();
    let cusp = interior
        .clone()
        .filter(|&i| fs[i].abs() <= CUSP_LEVEL && local_min_abs(i))
        .min_by(|&a, &b| fs[a].abs().total_cmp(&fs[b].abs()));
    if let Some(i) = cusp {
        return Ok(choice(xs[i], AlphaKind::Extremum, fs[i]));
    }

    let d2 = |i: usize| fs[i + 1] - 2.0 * fs[i] + fs[i - 1];
    let key = |i: usize| match rule {
        ExtremumRule::Flattest => d2(i).abs(),
        ExtremumRule::SmallestObjective => fs[i].abs(),
    };
    let extremum = interior
        .clone()
        .filter(|&i| (fs[i] - fs[i - 1]) * (fs[i + 1] - fs[i]) < 0.0 && local_min_abs(i))
        .min_by(|&a, &b| key(a).total_cmp(&key(b)));
    if let Some(i) = extremum {
        let is_max = fs[i] > fs[i - 1];
        let sign = if is_max { -1.0 } else { 1.0 };
        let (a, fa) = golden_section(|x| objective(x).map(|v| sign * v), xs[i - 1], xs[i + 1])?;
        return Ok(choice(a, AlphaKind::Extremum, sign * fa));
    }

    let second = |f: &mut F, x: f64, h: f64| -> Result<f64> { Ok(f(x + h)? - 2.0 * f(x)? + f(x - h)?) };
    let d2: Vec<f64> = interior.clone().map(d2).collect();
    // d2[j] belongs to grid point j + 1; entries at rounding level carry no
    // sign information and are skipped when looking for a sign change
    let noise = CURVATURE_NOISE * fs.iter().fold(0.0f64, |m, f| m.max(f.abs()));
    let significant: Vec<usize> = (0..d2.len()).filter(|&j| d2[j].abs() > noise).collect();
    let turning = significant
        .windows(2)
        .map(|w| (w[0], w[1]))
        .filter(|&(j, k)| d2[j] * d2[k] < 0.0)
        .min_by(|&(a, _), &(b, _)| {
            let slope = |j: usize| (fs[j + 2] - fs[j + 1]).abs();
            slope(a).total_cmp(&slope(b))
        });
    if let Some((j, k)) = turning {
        let (mut a, mut b) = (xs[j + 1], xs[k + 1]);
        let mut da = d2[j];
        while b - a > ALPHA_TOL {
            let m = 0.5 * (a + b);
            let dm = second(&mut objective, m, step)?;
            if dm.abs() <= noise {
                a = m;
                b = m;
                break;
            }
            if (dm < 0.0) == (da < 0.0) {
                a = m;
                da = dm;
            } else {
                b = m;
            }
        }
        let alpha = 0.5 * (a + b);
        let value = objective(alpha)?;
        return Ok(choice(alpha, AlphaKind::TurningPoint, value));
    }

    Err(Error::NotFound {
        what: "extremum or turning point of the PMS objective",
        lo,
        hi,
    })
}

fn golden_section<F>(mut f: F, mut a: f64, mut b: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while b - a > ALPHA_TOL {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d)?;
        }
    }
    let x = 0.5 * (a + b);
    Ok((x, f(x)?))
}
