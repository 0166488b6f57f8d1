//! Non-perturbative reference values.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_gaussian_tail, QuadratureOptions};

use super::OscillatorModel;

/// Agreement between successive basis sizes that counts as converged.
pub const BASIS_STABILITY: f64 = 1e-10;

fn lowest_eigenvalue(h: DMatrix<f64>) -> f64 {
    h.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
}

/// `r²` on the s-wave states of the `M`-dimensional oscillator (`ω = 1`),
/// size `k`: diagonal `2n + M/2`, off-diagonal `−√((n+1)(n+M/2))`.
fn radial_r2(m: f64, k: usize) -> DMatrix<f64> {
    DMatrix::from_fn(k, k, |i, j| {
        let n = i.min(j) as f64;
        if i == j {
            2.0 * n + 0.5 * m
        } else if i.abs_diff(j) == 1 {
            -((n + 1.0) * (n + 0.5 * m)).sqrt()
        } else {
            0.0
        }
    })
}

fn om_ground_state(m: u32, lambda: f64, size: usize) -> f64 {
    let m = f64::from(m);
    // (r²)² truncated to `size` is exact when r² is built one state larger
    let r2 = radial_r2(m, size + 1);
    let r4 = (&r2 * &r2).view((0, 0), (size, size)).into_owned();
    let h = DMatrix::from_fn(size, size, |i, j| {
        let free = if i == j { 2.0 * i as f64 + 0.5 * m } else { 0.0 };
        free + lambda * r4[(i, j)]
    });
    lowest_eigenvalue(h)
}

/// `x²` on the even 1-D states `|2i⟩`, size `k`.
fn even_x2(k: usize) -> DMatrix<f64> {
    DMatrix::from_fn(k, k, |i, j| {
        let m = 2.0 * i.min(j) as f64;
        if i == j {
            m + 0.5
        } else if i.abs_diff(j) == 1 {
            0.5 * ((m + 1.0) * (m + 2.0)).sqrt()
        } else {
            0.0
        }
    })
}

fn aniso_ground_state(lambda: f64, delta: f64, cutoff: usize) -> f64 {
    let x2 = even_x2(cutoff + 2);
    let x4 = &x2 * &x2;
    let states: alloc::vec::Vec<(usize, usize)> = (0..=cutoff).flat_map(|d| (0..=d).map(move |i| (i, d - i))).collect();
    let cross = 2.0 * (1.0 - delta);
    let h = DMatrix::from_fn(states.len(), states.len(), |r, c| {
        let (i, j) = states[r];
        let (k, l) = states[c];
        let mut v = 0.0;
        if j == l {
            v += x4[(i, k)];
        }
        if i == k {
            v += x4[(j, l)];
        }
        v += cross * x2[(i, k)] * x2[(j, l)];
        v *= lambda;
        if r == c {
            v += 2.0 * (i + j) as f64 + 1.0;
        }
        v
    });
    lowest_eigenvalue(h)
}

fn converge(sizes: &[usize], mut value_at: impl FnMut(usize) -> f64) -> Result<f64> {
    let mut prev = value_at(sizes[0]);
    for &s in &sizes[1..] {
        let cur = value_at(s);
        if (cur - prev).abs() <= BASIS_STABILITY * cur.abs().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Convergence(alloc::format!(
        "ground state not stable to {BASIS_STABILITY:e} up to basis size {}",
        sizes[sizes.len() - 1]
    )))
}

/// Ground-state energy (or normalised integral) at coupling `g`.
///
/// Oscillators are diagonalised in a harmonic basis grown until two
/// successive sizes agree to [`BASIS_STABILITY`]; the zero-dimensional
/// integral is done by quadrature.
pub fn exact_reference(model: &OscillatorModel, g: f64, delta: f64) -> Result<f64> {
    if !(g >= 0.0 && g.is_finite()) {
        return Err(Error::Domain(alloc::format!("coupling g = {g} must be non-negative")));
    }
    let lambda = g / 4.0;
    match *model {
        OscillatorModel::OmSymmetric { m } => {
            if m == 0 {
                return Err(Error::Domain("oscillator dimension M must be at least 1".into()));
            }
            if g == 0.0 {
                return Ok(0.5 * f64::from(m));
            }
            converge(&[16, 32, 48, 64, 96, 128, 192, 256], |s| om_ground_state(m, lambda, s))
        }
        OscillatorModel::Aniso2d => {
            if g == 0.0 {
                return Ok(1.0);
            }
            converge(&[8, 12, 16, 20, 24, 30, 36, 44], |k| {
                aniso_ground_state(lambda, delta, k)
            })
        }
        OscillatorModel::ZeroDimensional => {
            if g == 0.0 {
                return Ok(1.0);
            }
            let norm = (2.0 / core::f64::consts::PI).sqrt();
            let est = integrate_gaussian_tail(
                |x| (-0.5 * x * x - lambda * x * x * x * x).exp(),
                8.0,
                2.0,
                &QuadratureOptions::relative(1e-14),
            )?;
            Ok(norm * est.value)
        }
    }
}
