//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use resum_cli::reference;
use resum_core::fixedpoint::*;
use resum_core::oscillator::{exact_reference, OscillatorModel};
use resum_core::pms::{optimize_alpha, row_judicial, row_ratio, AlphaKind, PMS_QUAD_TOL};
use resum_core::resummer::*;
use resum_core::{load_builtin_beta_tables, TruncatedBivariateSeries};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    check(elapsed.as_secs_f64() <= limit_s as f64, || {
        format!("took {:.1} s, limit {limit_s} s", elapsed.as_secs_f64())
    })
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn table1() -> Outcome {
    let start = Instant::now();
    let model = OscillatorModel::OmSymmetric { m: 1 };
    let series = model.series(9).map_err(e)?;
    let lo = model.large_order().map_err(e)?;
    let mut worst: [f64; 2] = [0.0; 2];
    for (col, alpha) in [1.0 / 3.0, 0.389].into_iter().enumerate() {
        let cfg = ResumConfig::new(lo.clone(), alpha, 9);
        for (i, (g, table, tol)) in [(0.4, &reference::T1_WEAK, 5e-6), (4.0, &reference::T1_STRONG, 5e-5)]
            .into_iter()
            .enumerate()
        {
            let seq = resum_row_sequence(&series, 0, g, &cfg).map_err(e)?;
            for n in 1..=9 {
                let want = if col == 0 { table[n - 1].0 } else { table[n - 1].1 };
                let d = (seq[n] - want).abs();
                worst[i] = worst[i].max(d);
                check(d <= tol, || {
                    format!("alpha = {alpha}, g = {g}, N = {n}: {} vs {want}", seq[n])
                })?;
            }
        }
    }
    let ew = exact_reference(&model, 0.4, 0.0).map_err(e)?;
    let es = exact_reference(&model, 4.0, 0.0).map_err(e)?;
    check((ew - reference::T1_EXACT.0).abs() <= 1e-6, || {
        format!("exact weak {ew}")
    })?;
    check((es - reference::T1_EXACT.1).abs() <= 1e-5, || {
        format!("exact strong {es}")
    })?;
    within(start.elapsed(), 10)?;
    Ok(format!(
        "max dev {:.1e} (g/4=0.1), {:.1e} (g/4=1.0); exact {ew:.7}, {es:.7}; {:.2} s",
        worst[0],
        worst[1],
        start.elapsed().as_secs_f64()
    ))
}

fn oscillator_pms(model: OscillatorModel, order: usize) -> Result<(TruncatedBivariateSeries, ResumConfig), String> {
    let cfg = ResumConfig::new(model.large_order().map_err(e)?, 0.0, order).with_quad_tol(PMS_QUAD_TOL);
    Ok((model.series(9).map_err(e)?, cfg))
}

fn pms_values() -> Outcome {
    let start = Instant::now();
    let range = (-1.0, 2.0);
    let om1 = OscillatorModel::OmSymmetric { m: 1 };

    let (s, cfg) = oscillator_pms(om1, 7)?;
    let j = optimize_alpha(|a| row_judicial(&s, 0, 0.4, &cfg.clone().with_alpha(a)), range, 121).map_err(e)?;
    check((j.alpha - 0.3408).abs() <= 0.002, || {
        format!("judicial M=1: {}", j.alpha)
    })?;

    let (s, cfg) = oscillator_pms(om1, 6)?;
    let r1 = optimize_alpha(|a| row_ratio(&s, 0, 0.4, &cfg.clone().with_alpha(a)), range, 121).map_err(e)?;
    check((r1.alpha - 0.389).abs() <= 0.005, || format!("ratio M=1: {}", r1.alpha))?;

    let (s, cfg) = oscillator_pms(OscillatorModel::OmSymmetric { m: 2 }, 6)?;
    let r2 = optimize_alpha(|a| row_ratio(&s, 0, 0.4, &cfg.clone().with_alpha(a)), range, 121).map_err(e)?;
    check((r2.alpha - 0.323).abs() <= 0.005, || format!("ratio M=2: {}", r2.alpha))?;
    check(r2.kind == AlphaKind::TurningPoint, || {
        format!("ratio M=2 kind {:?}", r2.kind)
    })?;

    let (s, cfg) = oscillator_pms(OscillatorModel::ZeroDimensional, 7)?;
    let z = optimize_alpha(|a| row_judicial(&s, 0, 0.4, &cfg.clone().with_alpha(a)), range, 121).map_err(e)?;
    check((z.alpha + 0.25).abs() <= 0.001, || {
        format!("zero-d minimum at {}", z.alpha)
    })?;
    check(z.objective_value.abs() < 1e-8, || {
        format!("zero-d cusp value {}", z.objective_value)
    })?;
    within(start.elapsed(), 30)?;
    Ok(format!(
        "judicial {:.4}, ratio M=1 {:.4}, ratio M=2 {:.4} (turning point), zero-d {:.4} (value {:.1e}); {:.2} s",
        j.alpha,
        r1.alpha,
        r2.alpha,
        z.alpha,
        z.objective_value,
        start.elapsed().as_secs_f64()
    ))
}

fn field_theory_pms() -> Outcome {
    let start = Instant::now();
    let (bu, bv) = load_builtin_beta_tables();
    let cfg = ResumConfig::new(LargeOrderBehavior::phi4_cubic(), 0.0, 6).with_quad_tol(PMS_QUAD_TOL);
    let range = (0.5, 2.5);
    let u = optimize_alpha(|a| row_ratio(&bu, 0, 0.1, &cfg.clone().with_alpha(a)), range, 101).map_err(e)?;
    let v = optimize_alpha(|a| row_ratio(&bv, 1, 0.1, &cfg.clone().with_alpha(a)), range, 101).map_err(e)?;
    check((u.alpha - 1.348).abs() <= 0.01, || format!("beta^u: {}", u.alpha))?;
    check((v.alpha - 1.225).abs() <= 0.01, || format!("beta^v: {}", v.alpha))?;
    Ok(format!(
        "alpha_u {:.4}, alpha_v {:.4} at field-theory g = 0.1; {:.2} s",
        u.alpha,
        v.alpha,
        start.elapsed().as_secs_f64()
    ))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn table2() -> Outcome {
    let start = Instant::now();
    let w = SearchWindow::default();
    let mut worst_g: f64 = 0.0;
    let mut worst_d: f64 = 0.0;
    for n in 2..=6 {
        let sys = BetaSystem::builtin(n);
        let iso = find_isotropic(&sys, &w).map_err(e)?;
        let r = rel(iso.g_star, reference::T2_ISO[n - 2]);
        worst_g = worst_g.max(r);
        check(r < 0.005, || format!("N = {n}: isotropic g* {}", iso.g_star))?;
        let cub = find_cubic(&sys, &w).map_err(e)?;
        match (cub, reference::T2_CUBIC[n - 2]) {
            (None, None) => {}
            (Some(c), Some((g, d))) => {
                worst_g = worst_g.max(rel(c.g_star, g));
                worst_d = worst_d.max(rel(c.delta_star, d));
                check(rel(c.g_star, g) < 0.005, || format!("N = {n}: cubic g* {}", c.g_star))?;
                check(c.delta_star > 0.0 && rel(c.delta_star, d) < 0.1, || {
                    format!("N = {n}: cubic delta* {}", c.delta_star)
                })?;
            }
            (got, want) => return Err(format!("N = {n}: cubic point {got:?}, expected {want:?}")),
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!(
        "worst g* {:.2e} rel, worst delta* {:.2e} rel, no cubic point at N = 2; {:.2} s",
        worst_g,
        worst_d,
        start.elapsed().as_secs_f64()
    ))
}

fn table3() -> Outcome {
    let start = Instant::now();
    let w = SearchWindow::default();
    let mut worst_b1: f64 = 0.0;
    let mut worst_b2: f64 = 0.0;
    for n in 4..=6 {
        let sys = BetaSystem::builtin(n);
        let fp = find_cubic(&sys, &w)
            .map_err(e)?
            .ok_or_else(|| format!("N = {n}: no cubic point"))?;
        let cub = stability_eigenvalues(&sys, &fp).map_err(e)?;
        let iso = stability_eigenvalues(&sys, &find_isotropic(&sys, &w).map_err(e)?).map_err(e)?;
        check(cub.b2 > 0.0 && 0.0 > iso.b2, || {
            format!("N = {n}: sign structure broken, b2_cub {} b2_iso {}", cub.b2, iso.b2)
        })?;
        let want = reference::T3[n - 4];
        for (got, want, is_b1) in [
            (cub.b1, want[0], true),
            (cub.b2, want[1], false),
            (iso.b1, want[2], true),
            (iso.b2, want[3], false),
        ] {
            let (tol, worst) = if is_b1 {
                (0.02, &mut worst_b1)
            } else {
                (0.25, &mut worst_b2)
            };
            *worst = worst.max(rel(got, want));
            check(rel(got, want) <= tol, || format!("N = {n}: {got} vs {want}"))?;
        }
    }
    Ok(format!(
        "b2_cub > 0 > b2_iso for N = 4..6; worst b1 {:.1e} rel, worst b2 {:.1e} rel; {:.2} s",
        worst_b1,
        worst_b2,
        start.elapsed().as_secs_f64()
    ))
}

fn zero_dimensional() -> Outcome {
    let model = OscillatorModel::ZeroDimensional;
    let series = model.series(9).map_err(e)?;
    let lo = model.large_order().map_err(e)?;
    let cfg = ResumConfig::new(lo.clone(), -0.25, 0);
    let mut worst: f64 = 0.0;
    for g in [0.4, 4.0] {
        let exact = exact_reference(&model, g, 0.0).map_err(e)?;
        let z = resum_row(&series, 0, g, &cfg).map_err(e)?;
        let r = (z - exact).abs() / exact;
        worst = worst.max(r);
        check(r <= 10.0 * cfg.quad_rel_tol, || format!("g = {g}: {z} vs {exact}"))?;
    }
    let cfg = ResumConfig::new(lo, 0.0, 9);
    let exact = exact_reference(&model, 0.4, 0.0).map_err(e)?;
    let z9 = resum_row(&series, 0, 0.4, &cfg).map_err(e)?;
    let r9 = (z9 - exact).abs() / exact;
    check(r9 < 1e-4, || format!("alpha = 0, N = 9: relative error {r9}"))?;
    Ok(format!(
        "N = 0 at alpha = -1/4: rel err {worst:.1e}; alpha = 0, N = 9: rel err {r9:.1e}"
    ))
}

fn properties() -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    for i in 0..=80 {
        let c = -20.0 + 0.5 * i as f64 + 0.123;
        for k in 0..30 {
            let rhs = pochhammer(c, k) * (c + k as f64);
            check(
                (pochhammer(c, k + 1) - rhs).abs() <= 1e-12 * rhs.abs().max(f64::MIN_POSITIVE),
                || format!("Pochhammer recurrence at c = {c}, k = {k}"),
            )?;
            checked += 1;
        }
    }
    for i in 0..=60 {
        let a = -15.0 + 0.5 * i as f64 + 0.37;
        for m in 1..20 {
            let (x, y) = (gen_binomial(a - 1.0, m), gen_binomial(a - 1.0, m - 1));
            check(
                (gen_binomial(a, m) - x - y).abs() <= 1e-12 * (x.abs() + y.abs()).max(1.0),
                || format!("Pascal rule at a = {a}, m = {m}"),
            )?;
            checked += 1;
        }
    }
    for p in 0..=6 {
        for n in 0..=p.min(3) {
            for g in [0.01, 0.1, 1.0, 5.0] {
                for alpha in [-1.0, -0.25, 0.5, 1.3, 2.0] {
                    let cfg = ResumConfig::new(LargeOrderBehavior::phi4_cubic(), alpha, 6);
                    let v = eval_ipn(p, n, g, &cfg).map_err(e)?;
                    check(v > 0.0, || format!("I_{p}{n}({g}) = {v} at alpha = {alpha}"))?;
                    checked += 1;
                }
            }
        }
    }
    let (bu, bv) = load_builtin_beta_tables();
    for (s, n) in [(&bu, 0), (&bu, 1), (&bv, 1)] {
        for order in [1usize, 2].into_iter().filter(|&o| o >= n) {
            let cfg = ResumConfig::new(LargeOrderBehavior::phi4_cubic(), 1.3, order).with_quad_tol(1e-14);
            let gap = |g: f64| -> Result<f64, String> {
                let raw: f64 = (n..=order).map(|k| s.coefficient(k, n) * g.powi(k as i32)).sum();
                Ok(resum_row(s, n, g, &cfg).map_err(e)? - raw)
            };
            let ratio = gap(2e-3)? / gap(1e-3)?;
            let want = 2f64.powi(order as i32 + 1);
            check(ratio > want / 2.0 && ratio < want * 2.0, || {
                format!(
                    "{} row {n}, N = {order}: gap ratio {ratio}, expected ~{want}",
                    s.label()
                )
            })?;
            checked += 1;
        }
    }
    for i in 0..625 {
        let v = |j: u32| -3.0 + 1.5 * ((i / 5usize.pow(j)) % 5) as f64 + 0.1 * j as f64;
        let m = [[v(0), v(1)], [v(2), v(3)]];
        let (b1, b2, im) = eigenvalues_2x2(m);
        let tr = m[0][0] + m[1][1];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let ok = if im == 0.0 {
            (b1 + b2 - tr).abs() <= 1e-10 * tr.abs().max(1.0) && (b1 * b2 - det).abs() <= 1e-10 * det.abs().max(1.0)
        } else {
            (2.0 * b1 - tr).abs() <= 1e-12 * tr.abs().max(1.0)
                && (b1 * b1 + im * im - det).abs() <= 1e-10 * det.abs().max(1.0)
        };
        check(ok && b1 >= b2, || format!("trace/det identity for {m:?}"))?;
        checked += 1;
    }
    let bin = env!("CARGO_BIN_EXE_resum");
    for args in [&["tables", "t2"][..], &["figure", "f1b"], &["--json", "tables", "t3"]] {
        let run = || Command::new(bin).args(args).output().map_err(e);
        let (a, b) = (run()?, run()?);
        check(a.status.success() && b.status.success(), || format!("{args:?} failed"))?;
        check(a.stdout == b.stdout, || {
            format!("{args:?}: output differs between runs")
        })?;
        checked += 1;
    }
    within(start.elapsed(), 60)?;
    Ok(format!("{checked} checks; {:.2} s", start.elapsed().as_secs_f64()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 oscillator energy table", table1),
        ("2 PMS values", pms_values),
        ("3 field-theory PMS", field_theory_pms),
        ("4 fixed-point table", table2),
        ("5 stability table", table3),
        ("6 zero-dimensional exactness", zero_dimensional),
        ("7 property suites", properties),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
