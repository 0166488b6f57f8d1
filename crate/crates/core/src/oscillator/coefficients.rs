//! Exact-rational perturbation coefficients of the validation models.
//!
//! All series are returned in the `g` convention, i.e. for an interaction
//! `(g/4) V`, so a coefficient in `λ = g/4` is divided by `4^k`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::TruncatedBivariateSeries;

pub const OM_MAX_ORDER: usize = 30;
pub const ZEROD_MAX_ORDER: usize = 60;
pub const ANISO_MAX_ORDER: usize = 9;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn quarter_power(k: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(4).pow(k as u32))
}

/// Rational to the nearest `f64` we can get through num's conversion.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Ground-state coefficients `E_k` of `H = p²/2 + r²/2 + (g/4) r⁴` in `M`
/// dimensions, `k = 0..=k_max`.
///
/// Bender–Wu recursion on the s-wave: with `ψ = e^{-r²/2} Σ_k λ^k Σ_j c_kj r^{2j}`
/// the Schrödinger equation becomes, order by order,
///
/// ```text
/// 2j c_kj = (j+1)(2j+M) c_k,j+1 + Σ_{i=1}^{k-1} E_i c_{k-i},j − c_{k-1},j-2 ,   E_k = −M c_k1
/// ```
///
/// solved downward in `j` from `j = 2k`.
pub fn om_coefficients(m: u32, k_max: usize) -> Result<Vec<BigRational>> {
    if m == 0 {
        return Err(Error::Domain("oscillator dimension M must be at least 1".into()));
    }
    if k_max > OM_MAX_ORDER {
        return Err(Error::Resource {
            requested: k_max,
            limit: OM_MAX_ORDER,
        });
    }
    let mf = int(i64::from(m));
    let mut energies: Vec<BigRational> = vec![rat(i64::from(m), 2)];
    // c[k][j], j = 0..=2k
    let mut c: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    let coef = |c: &Vec<Vec<BigRational>>, k: usize, j: isize| -> BigRational {
        if j < 0 {
            return BigRational::zero();
        }
        c[k].get(j as usize).cloned().unwrap_or_else(BigRational::zero)
    };

    for k in 1..=k_max {
        let top = 2 * k;
        let mut ck = vec![BigRational::zero(); top + 2];
        for j in (1..=top).rev() {
            let jf = j as i64;
            let mut s = int((jf + 1) * (2 * jf + i64::from(m))) * &ck[j + 1];
            for (i, e) in energies.iter().enumerate().take(k).skip(1) {
                s += e * coef(&c, k - i, j as isize);
            }
            s -= coef(&c, k - 1, j as isize - 2);
            ck[j] = s / int(2 * jf);
        }
        let e_k = -(&mf * &ck[1]);
        ck.truncate(top + 1);
        c.push(ck);
        energies.push(e_k);
    }
    Ok(energies
        .into_iter()
        .enumerate()
        .map(|(k, e)| e * quarter_power(k))
        .collect())
}

/// Coefficients of the normalised integral
/// `Z(g)/Z(0) = (2π)^{-1/2} ∫ dx exp(−x²/2 − g x⁴/4)`:
/// `z_k = (−1)^k (4k−1)!! / (4^k k!)`.
pub fn zerod_coefficients(k_max: usize) -> Result<Vec<BigRational>> {
    if k_max > ZEROD_MAX_ORDER {
        return Err(Error::Resource {
            requested: k_max,
            limit: ZEROD_MAX_ORDER,
        });
    }
    let mut out = Vec::with_capacity(k_max + 1);
    let mut z = BigRational::one();
    out.push(z.clone());
    for k in 1..=k_max {
        // z_k / z_{k-1} = −(4k−1)(4k−3) / (4k)
        let kk = k as i64;
        z = -(z * int((4 * kk - 1) * (4 * kk - 3))) / int(4 * kk);
        out.push(z.clone());
    }
    Ok(out)
}

/// Triangular exact-rational table `E_kn`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalTable {
    max_order: usize,
    max_row: usize,
    entries: Vec<BigRational>,
}

impl RationalTable {
    fn new(max_order: usize, max_row: usize) -> Self {
        Self {
            max_order,
            max_row,
            entries: vec![BigRational::zero(); (max_order + 1) * (max_order + 2) / 2],
        }
    }

    fn slot(k: usize, n: usize) -> usize {
        k * (k + 1) / 2 + n
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn max_row(&self) -> usize {
        self.max_row
    }

    pub fn get(&self, k: usize, n: usize) -> BigRational {
        if n > k || k > self.max_order || n > self.max_row {
            BigRational::zero()
        } else {
            self.entries[Self::slot(k, n)].clone()
        }
    }

    /// Column `n` as floats, `k = n..=max_order` (or `k = 0..` for `n = 0`).
    pub fn column_f64(&self, n: usize) -> Vec<f64> {
        (0..=self.max_order).map(|k| to_f64(&self.get(k, n))).collect()
    }

    pub fn to_series(&self, label: impl Into<String>) -> TruncatedBivariateSeries {
        let mut s = TruncatedBivariateSeries::zeros(label, self.max_order);
        for k in 0..=self.max_order {
            for n in 0..=k.min(self.max_row) {
                s.set(k, n, to_f64(&self.entries[Self::slot(k, n)]))
                    .expect("entry inside triangular support");
            }
        }
        s
    }
}

/// Converts an exact column to a float series in the `n = 0` row.
pub fn column_series(label: impl Into<String>, coeffs: &[BigRational]) -> Result<TruncatedBivariateSeries> {
    let column: Vec<f64> = coeffs.iter().map(to_f64).collect();
    TruncatedBivariateSeries::from_column(label, &column)
}

/// Which coordinate is stored first in the monomial index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisOrder {
    XFirst,
    YFirst,
}

/// Polynomial in `(x², y²)`: coefficient of `x^{2a} y^{2b}`, total degree
/// `a + b ≤ deg`.
#[derive(Clone)]
struct EvenPoly {
    deg: usize,
    axes: AxisOrder,
    c: Vec<BigRational>,
}

impl EvenPoly {
    fn zero(deg: usize, axes: AxisOrder) -> Self {
        Self {
            deg,
            axes,
            c: vec![BigRational::zero(); (deg + 1) * (deg + 2) / 2],
        }
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        let (p, q) = match self.axes {
            AxisOrder::XFirst => (a, b),
            AxisOrder::YFirst => (b, a),
        };
        let d = p + q;
        d * (d + 1) / 2 + q
    }

    fn get(&self, a: usize, b: usize) -> BigRational {
        if a + b > self.deg {
            BigRational::zero()
        } else {
            self.c[self.idx(a, b)].clone()
        }
    }

    fn add_to(&mut self, a: usize, b: usize, v: &BigRational) {
        let i = self.idx(a, b);
        self.c[i] += v;
    }

    fn monomials(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.deg).flat_map(|d| (0..=d).map(move |a| (a, d - a)))
    }

    /// `self += scale · terms · other` for a monomial list `terms`.
    fn add_product(&mut self, terms: &[(usize, usize, i64)], other: &EvenPoly, scale: &BigRational) {
        for (a, b) in other.monomials() {
            let v = other.get(a, b);
            if v.is_zero() {
                continue;
            }
            let v = v * scale;
            for &(ta, tb, tc) in terms {
                self.add_to(a + ta, b + tb, &(&v * int(tc)));
            }
        }
    }

    fn add_scaled(&mut self, other: &EvenPoly, scale: &BigRational) {
        for (a, b) in other.monomials() {
            let v = other.get(a, b);
            if !v.is_zero() {
                self.add_to(a, b, &(v * scale));
            }
        }
    }
}

// x⁴ + 2x²y² + y⁴  and  −2x²y²  in (x², y²) exponents
const ISOTROPIC_QUARTIC: [(usize, usize, i64); 3] = [(2, 0, 1), (1, 1, 2), (0, 2, 1)];
const ANISOTROPY: [(usize, usize, i64); 1] = [(1, 1, -2)];

/// Double expansion `E(g, δ) = Σ E_kn g^k δ^n` of the ground-state energy of
/// `H = (p_x² + p_y² + x² + y²)/2 + (g/4)[x⁴ + 2(1−δ)x²y² + y⁴]`,
/// `0 ≤ n ≤ min(k, n_max)`, `k ≤ k_max`.
pub fn aniso2d_coefficients(k_max: usize, n_max: usize) -> Result<RationalTable> {
    aniso2d_coefficients_with_axes(k_max, n_max, AxisOrder::XFirst)
}

/// As [`aniso2d_coefficients`], with an explicit storage order of the two
/// coordinates. Both orders must give identical tables.
pub fn aniso2d_coefficients_with_axes(k_max: usize, n_max: usize, axes: AxisOrder) -> Result<RationalTable> {
    if k_max > ANISO_MAX_ORDER {
        return Err(Error::Resource {
            requested: k_max,
            limit: ANISO_MAX_ORDER,
        });
    }
    if n_max > k_max {
        return Err(Error::Domain(alloc::format!("n_max = {n_max} exceeds k_max = {k_max}")));
    }

    // Rayleigh–Schrödinger in the (x², y²) polynomial form: with
    // ψ = e^{-(x²+y²)/2} φ, the unperturbed operator on φ is
    //   D x^{2a} y^{2b} = 2(a+b) x^{2a}y^{2b} − a(2a−1) x^{2a−2}y^{2b} − b(2b−1) x^{2a}y^{2b−2},
    // upper triangular in total degree.
    let rows = n_max + 1;
    let mut phi: Vec<Vec<Option<EvenPoly>>> = vec![vec![None; rows]; k_max + 1];
    let mut shift: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); rows]; k_max + 1];
    let mut one = EvenPoly::zero(0, axes);
    one.add_to(0, 0, &BigRational::one());
    phi[0][0] = Some(one);

    let minus_one = -BigRational::one();
    for k in 1..=k_max {
        for n in 0..=k.min(n_max) {
            let deg = 2 * k;
            let mut rhs = EvenPoly::zero(deg, axes);
            if let Some(p) = &phi[k - 1][n] {
                rhs.add_product(&ISOTROPIC_QUARTIC, p, &minus_one);
            }
            if n > 0 {
                if let Some(p) = &phi[k - 1][n - 1] {
                    rhs.add_product(&ANISOTROPY, p, &minus_one);
                }
            }
            for i in 0..=k {
                for m in 0..=n {
                    if (i, m) == (0, 0) || (i, m) == (k, n) {
                        continue;
                    }
                    let e = &shift[i][m];
                    if e.is_zero() {
                        continue;
                    }
                    if let Some(p) = &phi[k - i][n - m] {
                        rhs.add_scaled(p, e);
                    }
                }
            }

            let mut sol = EvenPoly::zero(deg, axes);
            for d in (1..=deg).rev() {
                for a in 0..=d {
                    let b = d - a;
                    let mut v = rhs.get(a, b);
                    let (af, bf) = (a as i64, b as i64);
                    v += int((af + 1) * (2 * af + 1)) * sol.get(a + 1, b);
                    v += int((bf + 1) * (2 * bf + 1)) * sol.get(a, b + 1);
                    if !v.is_zero() {
                        let i = sol.idx(a, b);
                        sol.c[i] = v / int(2 * d as i64);
                    }
                }
            }
            shift[k][n] = -(sol.get(1, 0) + sol.get(0, 1));
            phi[k][n] = Some(sol);
        }
    }

    let mut table = RationalTable::new(k_max, n_max);
    table.entries[0] = BigRational::one();
    for (k, row) in shift.iter().enumerate().take(k_max + 1).skip(1) {
        for (n, c) in row.iter().enumerate().take(k.min(n_max) + 1) {
            table.entries[RationalTable::slot(k, n)] = c * quarter_power(k);
        }
    }
    Ok(table)
}

/// True when consecutive coefficients alternate strictly in sign over
/// `k_lo..=k_hi`.
pub fn strictly_alternating(coeffs: &[BigRational], k_lo: usize, k_hi: usize) -> bool {
    (k_lo..k_hi).all(|k| {
        let a = &coeffs[k];
        let b = &coeffs[k + 1];
        !a.is_zero() && !b.is_zero() && a.is_positive() != b.is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn om_low_orders() {
        let e = om_coefficients(1, 3).unwrap();
        assert_eq!(e[0], rat(1, 2));
        assert_eq!(e[1], rat(3, 16));
        assert_eq!(e[2], rat(-21, 128));
        assert_eq!(e[3], rat(333, 1024));
        for m in 1..=4u32 {
            let e = om_coefficients(m, 1).unwrap();
            assert_eq!(e[0], rat(i64::from(m), 2));
            // first order: <r⁴>/4 = M(M+2)/16
            assert_eq!(e[1], rat(i64::from(m * (m + 2)), 16));
        }
    }

    #[test]
    fn om_bounds() {
        assert!(matches!(om_coefficients(1, 31), Err(Error::Resource { .. })));
        assert!(om_coefficients(0, 3).is_err());
    }

    #[test]
    fn om_signs_alternate() {
        for m in 1..=4u32 {
            let e = om_coefficients(m, 20).unwrap();
            assert!(strictly_alternating(&e, 1, 20), "M = {m}");
        }
    }

    #[test]
    fn zerod_values() {
        let z = zerod_coefficients(4).unwrap();
        assert_eq!(z[0], int(1));
        assert_eq!(z[1], rat(-3, 4));
        assert_eq!(z[2], rat(105, 32));
        // 11!! / (4³ 3!) = 10395 / 384
        assert_eq!(z[3], rat(-10395, 384));
        assert!(matches!(zerod_coefficients(61), Err(Error::Resource { .. })));
    }

    #[test]
    fn aniso_low_orders() {
        let t = aniso2d_coefficients(4, 4).unwrap();
        assert_eq!(t.get(0, 0), int(1));
        assert_eq!(t.get(1, 0), rat(1, 2));
        // −(g/4)·2·<x²y²> = −g/8
        assert_eq!(t.get(1, 1), rat(-1, 8));
        assert!(t.get(3, 4).is_zero());
    }

    #[test]
    fn aniso_isotropic_column_is_o2() {
        let t = aniso2d_coefficients(9, 3).unwrap();
        let o2 = om_coefficients(2, 9).unwrap();
        for (k, e) in o2.iter().enumerate() {
            assert_eq!(&t.get(k, 0), e, "k = {k}");
        }
    }

    #[test]
    fn aniso_axis_relabeling_is_exact() {
        let a = aniso2d_coefficients_with_axes(7, 7, AxisOrder::XFirst).unwrap();
        let b = aniso2d_coefficients_with_axes(7, 7, AxisOrder::YFirst).unwrap();
        assert_eq!(a, b);
        let sa = a.to_series("a");
        let sb = b.to_series("b");
        for k in 0..=7 {
            for n in 0..=k {
                assert_eq!(sa.coefficient(k, n).to_bits(), sb.coefficient(k, n).to_bits());
            }
        }
    }

    #[test]
    fn aniso_bounds() {
        assert!(matches!(aniso2d_coefficients(10, 2), Err(Error::Resource { .. })));
        assert!(aniso2d_coefficients(4, 5).is_err());
    }
}
