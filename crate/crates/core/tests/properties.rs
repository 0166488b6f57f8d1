//! Invariants that hold independently of any reference number.

use approx::assert_relative_eq;
use proptest::prelude::*;

use resum_core::fixedpoint::eigenvalues_2x2;
use resum_core::pms::{judicial_delta, ratio_delta};
use resum_core::resummer::*;
use resum_core::{load_builtin_beta_tables, CouplingPoint, TruncatedBivariateSeries};

fn series_strategy() -> impl Strategy<Value = TruncatedBivariateSeries> {
    prop::collection::vec(-10.0f64..10.0, 28).prop_map(|v| {
        TruncatedBivariateSeries::from_entries(
            "random",
            6,
            (0..=6)
                .flat_map(|k| (0..=k).map(move |n| (k, n)))
                .zip(v)
                .map(|((k, n), c)| (k, n, c)),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn pochhammer_recurrence(c in -20.0f64..20.0, k in 0usize..30) {
        let lhs = pochhammer(c, k + 1);
        let rhs = pochhammer(c, k) * (c + k as f64);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(f64::MIN_POSITIVE));
    }

    #[test]
    fn pascal_rule(a in -15.0f64..15.0, m in 1usize..20) {
        let lhs = gen_binomial(a, m);
        let rhs = gen_binomial(a - 1.0, m) + gen_binomial(a - 1.0, m - 1);
        let scale = gen_binomial(a - 1.0, m).abs() + gen_binomial(a - 1.0, m - 1).abs();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn eval_raw_is_linear(a in series_strategy(), b in series_strategy(),
                          g in -1.0f64..1.0, d in -1.0f64..1.0) {
        let sum = TruncatedBivariateSeries::from_entries(
            "sum", 6,
            (0..=6).flat_map(|k| (0..=k).map(move |n| (k, n)))
                .map(|(k, n)| (k, n, a.coefficient(k, n) + b.coefficient(k, n))),
        ).unwrap();
        let p = CouplingPoint::new(g, d);
        let lhs = sum.eval_raw(p);
        let rhs = a.eval_raw(p) + b.eval_raw(p);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * 200.0);
    }

    #[test]
    fn eval_raw_is_a_polynomial_of_bounded_degree(s in series_strategy(), d in -1.0f64..1.0) {
        // the 7th forward difference in g of a degree-6 polynomial vanishes
        let h = 0.1;
        let f = |i: usize| s.eval_raw(CouplingPoint::new(i as f64 * h, d));
        let mut diff: Vec<f64> = (0..8).map(f).collect();
        for _ in 0..7 {
            diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        }
        prop_assert!(diff[0].abs() < 1e-9);
    }

    #[test]
    fn judicial_scale_covariance(e in prop::collection::vec(0.1f64..2.0, 8), lambda in 0.01f64..100.0) {
        let scaled: Vec<f64> = e.iter().map(|x| lambda * x).collect();
        let a = judicial_delta(&e, 7).unwrap();
        let b = judicial_delta(&scaled, 7).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300));
    }

    #[test]
    fn ratio_scale_invariance(a in 0.1f64..2.0, b in 0.1f64..2.0, lambda in 0.5f64..2.0, neg: bool) {
        // powers of two scale without rounding
        let l = if neg { -lambda.log2().round().exp2() } else { lambda.log2().round().exp2() };
        prop_assert_eq!(ratio_delta(l * a, l * b).unwrap(), ratio_delta(a, b).unwrap());
    }

    #[test]
    fn basis_integrals_are_positive(p in 0usize..7, n in 0usize..4, g in 0.01f64..5.0,
                                    alpha in -1.0f64..2.0) {
        prop_assume!(n <= p);
        let cfg = ResumConfig::new(LargeOrderBehavior::phi4_cubic(), alpha, 6);
        prop_assert!(eval_ipn(p, n, g, &cfg).unwrap() > 0.0);
    }

    #[test]
    fn trace_det_identity(m in prop::array::uniform4(-3.0f64..3.0)) {
        let m = [[m[0], m[1]], [m[2], m[3]]];
        let (b1, b2, im) = eigenvalues_2x2(m);
        let tr = m[0][0] + m[1][1];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        prop_assert!(b1 >= b2);
        if im == 0.0 {
            prop_assert!((b1 + b2 - tr).abs() <= 1e-8 * tr.abs().max(1e-8));
            prop_assert!((b1 * b2 - det).abs() <= 1e-8 * det.abs().max(1e-8));
        } else {
            prop_assert!((2.0 * b1 - tr).abs() <= 1e-12 * tr.abs().max(1.0));
            prop_assert!((b1 * b1 + im * im - det).abs() <= 1e-8 * det.abs());
        }
    }
}

#[test]
fn basis_integral_small_coupling_law() {
    // I_pn(g) ≈ (σg/4)^p (b0+1)_p as g → 0
    let lo = LargeOrderBehavior::uniform(0.75, -0.5).unwrap();
    let cfg = ResumConfig::new(lo, 1.0 / 3.0, 6);
    assert!((eval_ipn(0, 0, 1e-4, &cfg).unwrap() - 1.0).abs() < 1e-3);
    for p in 0..=2 {
        let g = 1e-5;
        let want = (0.75 * g / 4.0f64).powi(p as i32) * pochhammer(2.0, p);
        assert_relative_eq!(eval_ipn(p, 0, g, &cfg).unwrap(), want, max_relative = 1e-3);
    }
}

/// The resummed row agrees with the truncated series up to `O(g^{N+1})`.
fn weak_coupling_ratio(series: &TruncatedBivariateSeries, n: usize, order: usize) -> f64 {
    let cfg = ResumConfig::new(LargeOrderBehavior::phi4_cubic(), 1.3, order).with_quad_tol(1e-14);
    let gap = |g: f64| {
        let raw: f64 = (n..=order).map(|k| series.coefficient(k, n) * g.powi(k as i32)).sum();
        resum_row(series, n, g, &cfg).unwrap() - raw
    };
    gap(2e-3) / gap(1e-3)
}

#[test]
fn weak_coupling_order_matching() {
    let (bu, bv) = load_builtin_beta_tables();
    for (s, n) in [(&bu, 0), (&bu, 1), (&bv, 1)] {
        for order in [1usize, 2] {
            if order < n {
                continue;
            }
            let want = 2f64.powi(order as i32 + 1);
            let r = weak_coupling_ratio(s, n, order);
            assert!(
                r > want / 2.0 && r < want * 2.0,
                "{} n = {n}, N = {order}: ratio {r}",
                s.label()
            );
        }
    }
}
