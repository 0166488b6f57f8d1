//! Fixed points of the resummed five-loop β-functions.

use resum_core::fixedpoint::*;
use resum_core::CouplingPoint;

const ISO: [f64; 5] = [0.560616, 0.440796, 0.393506, 0.4012, 0.389037];
const CUBIC: [(f64, f64); 4] = [
    (0.50208, 0.291074),
    (0.400199, 0.037862),
    (0.411057, 0.063068),
    (0.39154, 0.015309),
];
// (b1_cub, b2_cub, b1_iso, b2_iso) for N = 4, 5, 6
const EIGEN: [[f64; 4]; 3] = [
    [0.782796, 0.0048920, 0.784532, -0.00502046],
    [0.764835, 0.00851725, 0.763966, -0.00886277],
    [0.80609, 0.00212717, 0.80658, -0.00214788],
];

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn isotropic_points() {
    let w = SearchWindow::default();
    for (i, &want) in ISO.iter().enumerate() {
        let n = i + 2;
        let fp = find_isotropic(&BetaSystem::builtin(n), &w).unwrap();
        assert_eq!(fp.delta_star, 0.0);
        assert_eq!(fp.kind, FixedPointKind::Isotropic);
        assert!(rel(fp.g_star, want) < 0.005, "N = {n}: {}", fp.g_star);
        assert!(fp.residual_u.abs() < 1e-3 && fp.residual_v == 0.0);
    }
}

#[test]
fn cubic_points() {
    let w = SearchWindow::default();
    assert!(find_cubic(&BetaSystem::builtin(2), &w).unwrap().is_none());
    for (i, &(g, d)) in CUBIC.iter().enumerate() {
        let n = i + 3;
        let fp = find_cubic(&BetaSystem::builtin(n), &w).unwrap().expect("cubic point");
        assert!(rel(fp.g_star, g) < 0.005, "N = {n}: {fp:?}");
        assert!(fp.delta_star > 0.0 && rel(fp.delta_star, d) < 0.1, "N = {n}: {fp:?}");
        assert!(fp.residual_u.abs() < 1e-3 && fp.residual_v.abs() < 1e-3);
        assert_eq!(fp.within_small_delta(), n != 3);
    }
}

#[test]
fn printed_cubic_point_is_a_zero() {
    let sys = BetaSystem::builtin(6);
    let p = CouplingPoint::new(0.39154, 0.015309);
    for tag in [BetaTag::U, BetaTag::V] {
        assert!(resummed_beta(&sys, tag, p).unwrap().abs() < 1e-3);
    }
    let (bg, bd) = beta_g_delta(&sys, p).unwrap();
    assert!(bg.abs() < 1e-3 && bd.abs() < 1e-3);
    assert!(
        resummed_beta(&sys, BetaTag::U, CouplingPoint::isotropic(0.389037))
            .unwrap()
            .abs()
            < 5e-4
    );

    let du = delta_roots(&sys, CurveTag::BetaU, 0.39154, 0.5).unwrap();
    let dv = delta_roots(&sys, CurveTag::BetaVNontrivial, 0.39154, 0.5).unwrap();
    assert!(
        (du[0] - 0.015309).abs() < 1e-3 && (dv[0] - 0.015309).abs() < 1e-3,
        "{du:?} {dv:?}"
    );
    assert!(dv.iter().all(|d| d.abs() > 1e-6));
}

#[test]
fn first_order_root_is_linear() {
    let mut sys = BetaSystem::builtin(1);
    sys.cfg_u.order = 1;
    let rows = sys.rows(BetaTag::U, 0.3).unwrap();
    let roots = delta_roots(&sys, CurveTag::BetaU, 0.3, 1e9).unwrap();
    assert_eq!(roots, vec![-rows[0] / rows[1]]);
}

#[test]
fn stability_tables() {
    let w = SearchWindow::default();
    for (i, want) in EIGEN.iter().enumerate() {
        let n = i + 4;
        let sys = BetaSystem::builtin(n);
        let cub = stability_eigenvalues(&sys, &find_cubic(&sys, &w).unwrap().unwrap()).unwrap();
        let iso = stability_eigenvalues(&sys, &find_isotropic(&sys, &w).unwrap()).unwrap();
        assert!(!cub.is_complex() && !iso.is_complex());
        assert!(cub.b1 > 0.0 && cub.b2 > 0.0, "N = {n}: {cub:?}");
        assert!(iso.b1 > 0.0 && iso.b2 < 0.0, "N = {n}: {iso:?}");
        assert!(cub.is_stable() && !iso.is_stable());
        assert!(
            rel(cub.b1, want[0]) < 0.02 && rel(cub.b2, want[1]) < 0.25,
            "N = {n}: {cub:?}"
        );
        assert!(
            rel(iso.b1, want[2]) < 0.02 && rel(iso.b2, want[3]) < 0.25,
            "N = {n}: {iso:?}"
        );
        for r in [cub, iso] {
            assert!(rel(r.b1 + r.b2, r.trace()) < 1e-8);
            assert!(rel(r.b1 * r.b2, r.determinant()) < 1e-8);
        }
    }
}

#[test]
fn isotropic_point_is_where_delta_u_crosses_zero() {
    let sys = BetaSystem::builtin(6);
    let iso = find_isotropic(&sys, &SearchWindow::default()).unwrap();
    let (lo, hi) = (iso.g_star - 1e-4, iso.g_star + 1e-4);
    let d_lo = delta_roots(&sys, CurveTag::BetaU, lo, 0.5).unwrap()[0];
    let d_hi = delta_roots(&sys, CurveTag::BetaU, hi, 0.5).unwrap()[0];
    assert!(d_lo * d_hi < 0.0, "{d_lo} {d_hi}");
}

#[test]
fn curves_cross_once_near_the_cubic_point() {
    let sys = BetaSystem::builtin(6);
    let g: Vec<f64> = (0..41).map(|i| 0.35 + 0.002 * i as f64).collect();
    let cu = trace_zero_curve(&sys, CurveTag::BetaU, &g, 0.5).unwrap();
    let cv = trace_zero_curve(&sys, CurveTag::BetaVNontrivial, &g, 0.5).unwrap();
    assert_eq!(cu.samples.len(), g.len());
    assert_eq!(cv.samples.len(), g.len());
    let diff: Vec<f64> = cu.samples.iter().zip(&cv.samples).map(|(a, b)| a.1 - b.1).collect();
    let changes = diff.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
    assert_eq!(changes, 1, "{diff:?}");
    assert!(trace_zero_curve(&sys, CurveTag::BetaU, &[0.4, 0.3], 0.5).is_err());
}

#[test]
fn no_crossing_at_second_order() {
    // at N = 2 the β^u curve leaves the δ window before meeting the β^v curve
    let sys = BetaSystem::builtin(2);
    let g: Vec<f64> = (0..96).map(|i| 0.05 + 0.01 * i as f64).collect();
    let cu = trace_zero_curve(&sys, CurveTag::BetaU, &g, 0.5).unwrap();
    let cv = trace_zero_curve(&sys, CurveTag::BetaVNontrivial, &g, 0.5).unwrap();
    let mut signs = vec![];
    for (a, b) in &cu.samples {
        if let Some((_, d)) = cv.samples.iter().find(|(gv, _)| gv == a) {
            signs.push((b - d).signum());
        }
    }
    assert!(signs.windows(2).all(|w| w[0] == w[1]), "{signs:?}");
}
