//! Real roots of small real polynomials.

use alloc::vec::Vec;

use nalgebra::DMatrix;

/// Largest imaginary part accepted as a real root.
pub const IMAG_TOL: f64 = 1e-8;

/// `Σ c_i x^i`, coefficients in ascending order.
pub fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Value and first derivative.
pub fn eval_with_derivative(coeffs: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Real roots of `Σ c_i x^i`, ascending coefficients, in no particular order.
///
/// Roots come from the eigenvalues of the companion matrix, keeping those
/// with `|Im| < IMAG_TOL`, each polished by a few Newton steps.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let degree = match coeffs.iter().rposition(|&c| c != 0.0) {
        Some(d) => d,
        None => return Vec::new(),
    };
    let c = &coeffs[..=degree];
    match degree {
        0 => Vec::new(),
        1 => alloc::vec![-c[0] / c[1]],
        _ => {
            let lead = c[degree];
            let companion = DMatrix::from_fn(degree, degree, |i, j| {
                if i == 0 {
                    -c[degree - 1 - j] / lead
                } else if i == j + 1 {
                    1.0
                } else {
                    0.0
                }
            });
            companion
                .complex_eigenvalues()
                .iter()
                .filter(|z| z.im.abs() < IMAG_TOL)
                .map(|z| polish(c, z.re))
                .collect()
        }
    }
}

fn polish(coeffs: &[f64], mut x: f64) -> f64 {
    for _ in 0..4 {
        let (p, dp) = eval_with_derivative(coeffs, x);
        if dp == 0.0 || p == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.abs() <= 4.0 * f64::EPSILON * x.abs() {
            break;
        }
    }
    x
}
