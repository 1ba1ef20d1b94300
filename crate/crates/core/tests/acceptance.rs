//! One line per acceptance criterion; the target fails if any criterion does.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use circlelab::analysis::{
    convergence_report, cosine_sum_probe, d_partial_sup, d_sup_key, dyadic_ladder, running_max_table, sup_of,
    sweep_delta, uniform_grid, ConvergenceTarget, SweepConfig, COSINE_SUM_ENVELOPE, D_SUP_DELTAS, D_SUP_M,
    D_SUP_XS,
};
use circlelab::arith::{
    count_enumerate, count_floor_identity, count_floor_identity_direct, r2_divisor, r2_enumerate, r2_residue,
    r2_sieve,
};
use circlelab::series::{
    abel_direct, abel_summation, d_partial, euler_maclaurin, expint_closed_form, f_eps_limit,
    fresnel_closed_form, sqrt_closed_form, voronoi_partial, AbelIntegral, CosineSqrtKernel, EmIntegrand,
};
use circlelab::special::{bessel_j1_asymptotic, c1, fresnel, BesselPolicy};
use common::{golden, goldens, j1_series_exact, rel_close};

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn report(results: &mut Vec<Outcome>, name: &'static str, pass: bool, detail: String) {
    println!("{} {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    results.push(Outcome { name, pass, detail });
}

fn oracle_equivalence(results: &mut Vec<Outcome>) {
    let start = Instant::now();
    let mut bad = None;
    for n in 1..=100_000u64 {
        let e = r2_enumerate(n);
        if r2_divisor(n).unwrap() != e || r2_residue(n).unwrap() != e {
            bad = Some(n);
            break;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    report(
        results,
        "r2_oracle_equivalence",
        bad.is_none() && secs < 60.0,
        format!("n <= 1e5, first disagreement {bad:?}, {secs:.2} s"),
    );
}

fn summatory_agreement(results: &mut Vec<Outcome>) {
    let table = r2_sieve(10_000_000).unwrap();
    let mut ok = true;
    let mut notes = Vec::new();
    for k in 1..=7 {
        let x = 10u64.pow(k);
        let (e, s, f) = (count_enumerate(x), table.prefix_count(x), count_floor_identity(x));
        ok &= e == s && s == f;
        if !(e == s && s == f) {
            notes.push(format!("x=1e{k}: {e} {s} {f}"));
        }
    }
    let (b, d) = (count_floor_identity(1_000_000_000), count_floor_identity_direct(1_000_000_000));
    ok &= b == d;
    report(
        results,
        "summatory_three_way",
        ok,
        format!("x = 1e1..1e7 three-way, 1e9 blocked {b} vs direct {d} {}", notes.join("; ")),
    );
}

fn gauss_mean_value(results: &mut Vec<Outcome>) {
    let dev = |x: u64| (count_floor_identity(x) as f64 / x as f64 - PI).abs();
    let env_ok = [10_000u64, 1_000_000].iter().all(|&x| dev(x) <= 8.0 / (x as f64).sqrt());
    let seq = [dev(100), dev(10_000), dev(1_000_000)];
    let decreasing = seq[0] > seq[1] && seq[1] > seq[2];
    report(
        results,
        "gauss_mean_value",
        env_ok && decreasing,
        format!("|count/x - pi| at 1e2, 1e4, 1e6 = {:.3e}, {:.3e}, {:.3e}", seq[0], seq[1], seq[2]),
    );
}

fn voronoi_identity(results: &mut Vec<Outcome>) {
    let table = r2_sieve(100_000).unwrap();
    let policy = BesselPolicy::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for x in [10.5, 100.5] {
        let exact = count_floor_identity(x as u64) as f64;
        let v = voronoi_partial(x, 100_000, &table, &policy).unwrap().value;
        let raw = (v - exact).abs();
        let rep = convergence_report(ConvergenceTarget::Voronoi { x }, &[1000, 100_000], 100, Some(&table))
            .unwrap();
        let w0 = rep.rows[0].windowed_residual.unwrap().abs();
        let w1 = rep.rows[1].windowed_residual.unwrap().abs();
        ok &= raw <= 1e-2 && w1 < w0;
        parts.push(format!("x={x}: |residual| {raw:.3e}, windowed 1e3 {w0:.3e} -> 1e5 {w1:.3e}"));
    }
    report(results, "voronoi_identity", ok, parts.join("; "));
}

fn bessel_kernel(results: &mut Vec<Outcome>) {
    let mut worst: f64 = 0.0;
    for z in [20u64, 50, 100, 1_000, 100_000] {
        let a = bessel_j1_asymptotic(z as f64, 5).unwrap().value;
        worst = worst.max((a - j1_series_exact(z)).abs());
    }
    // (−1)^m (−1/2)_m (3/2)_m / m! by direct products
    let poch = |x: f64, m: usize| (0..m).map(|i| x + i as f64).product::<f64>();
    let fact = |m: usize| (1..=m).map(|i| i as f64).product::<f64>();
    let mut c_ok = true;
    for (m, expect) in [(0usize, 1.0), (1, 0.75), (2, -15.0 / 32.0)] {
        let direct = (-1f64).powi(m as i32) * poch(-0.5, m) * poch(1.5, m) / fact(m);
        c_ok &= rel_close(c1(m).unwrap(), direct, 1e-14) && rel_close(direct, expect, 1e-14);
    }
    report(
        results,
        "bessel_kernel",
        worst <= 1e-10 && c_ok,
        format!("max |asymptotic(5) - exact series| = {worst:.3e}, c1 {{1, 3/4, -15/32}} ok = {c_ok}"),
    );
}

fn fresnel_limits(results: &mut Vec<Outcome>) {
    let (c, s) = fresnel(1e4).unwrap();
    let (dc, ds) = ((c - 0.5).abs(), (s - 0.5).abs());
    report(
        results,
        "fresnel_limits",
        dc <= 1e-4 && ds <= 1e-4,
        format!("|C - 1/2| = {dc:.3e}, |S - 1/2| = {ds:.3e}"),
    );
}

fn abel_exactness(results: &mut Vec<Outcome>) {
    let mut worst: f64 = 0.0;
    for a in [1.0, 2.0, 7.3] {
        for m in [1_000usize, 1_000_000] {
            let lambdas: Vec<f64> = (1..=m).map(|n| (n as f64).sqrt()).collect();
            let coeffs = vec![1.0; m];
            let f = CosineSqrtKernel { a };
            let x = (m as f64).sqrt();
            let direct = abel_direct(&coeffs, &lambdas, &f, x).unwrap();
            let abel = abel_summation(&coeffs, &lambdas, &f, x, AbelIntegral::Telescoping).unwrap();
            worst = worst.max((abel - direct).abs() / direct.abs());
        }
    }
    report(results, "abel_exactness", worst <= 1e-10, format!("max relative difference {worst:.3e}"));
}

fn euler_maclaurin_bound(results: &mut Vec<Outcome>) {
    let mut ok = true;
    let mut worst_ratio: f64 = 0.0;
    for x in [1.0, 2.0] {
        for delta in [0.125, 0.2] {
            for m in [1_000u64, 100_000] {
                let em = euler_maclaurin(&EmIntegrand::new(x, delta).unwrap(), 1, m).unwrap();
                let direct = d_partial(x, m, delta).unwrap().value;
                let bound = em.tail_estimate.unwrap();
                let gap = (em.value - direct).abs();
                ok &= gap <= bound;
                worst_ratio = worst_ratio.max(gap / bound);
            }
        }
    }
    report(results, "euler_maclaurin_bound", ok, format!("max |EM - direct| / bound = {worst_ratio:.3e}"));
}

fn closed_form_regression(results: &mut Vec<Outcome>) {
    let g = golden("closed_form");
    let mut worst: f64 = 0.0;
    for a in [1.0, 2.0, 7.3] {
        for m in [1u64, 100, 10_000, 1_000_000] {
            let r = fresnel_closed_form(a, m).unwrap();
            worst = worst.max((r.residual - g.get(&format!("fresnel_a={a}_m={m}_residual")).unwrap()).abs());
        }
    }
    for (eps, x, y) in [(1.0, 1.0, 10.0), (1.0, 1.0, 1.0), (0.5, 2.0, 30.0), (1.0, 4.0, 100.0)] {
        let r = expint_closed_form(eps, x, y).unwrap();
        let key = format!("expint_eps={eps}_x={x}_y={y}_residual");
        worst = worst.max((r.residual - g.get(&key).unwrap()).abs());
    }
    let mut cross: f64 = 0.0;
    for (x, m) in [(2.0, 1u64), (2.0, 10_000), (3.0, 100), (2.0, 1_000_000)] {
        let r = sqrt_closed_form(x, m).unwrap();
        worst = worst.max((r.residual - g.get(&format!("sqrt_x={x}_m={m}_residual")).unwrap()).abs());
        if x == 2.0 {
            cross = cross.max((r.params["x2_rhs"] - r.rhs_closed).abs());
        }
    }
    worst = worst.max((f_eps_limit(1.0, 4.0).unwrap() - g.get("f_eps_limit_eps=1_x=4").unwrap()).abs());
    report(
        results,
        "closed_form_regression",
        worst <= 1e-8 && cross <= 1e-8,
        format!("max |residual - golden| = {worst:.3e}, x=2 cross-check {cross:.3e}"),
    );
}

fn boundedness_probes(results: &mut Vec<Outcome>) {
    let grid = uniform_grid(1.0, 100.0, 0.5);
    let sup = sup_of(&cosine_sum_probe(&grid, 1_000_000).unwrap());
    let g = golden("d_partial_sup");
    let mut d_ok = true;
    let mut d_max: f64 = 0.0;
    for r in d_partial_sup(&D_SUP_XS, &D_SUP_DELTAS, D_SUP_M).unwrap() {
        d_ok &= r.sup.is_finite() && rel_close(r.sup, g.get(&d_sup_key(r.x, r.delta)).unwrap(), 1e-8);
        d_max = d_max.max(r.sup);
    }
    report(
        results,
        "boundedness_probes",
        sup.value <= COSINE_SUM_ENVELOPE && d_ok,
        format!(
            "cosine-sum sup {:.4} at a = {}, M = {} (envelope {COSINE_SUM_ENVELOPE}, {} dyadic M); d_partial sup {d_max:.4} matches golden = {d_ok}",
            sup.value,
            sup.a,
            sup.m,
            dyadic_ladder(1_000_000).len()
        ),
    );
}

fn running_max_reproducible(results: &mut Vec<Outcome>) {
    let blocks = |w| sweep_delta(&SweepConfig::integers(1.0, 1e6, w)).unwrap().blocks;
    let base = blocks(1);
    let identical = [1usize, 4, 8].iter().all(|&w| blocks(w) == base);
    let table = running_max_table(&base, &goldens()).unwrap();
    let golden_ok = table.iter().all(|r| r.matches_golden);
    report(
        results,
        "running_max_reproducible",
        identical && golden_ok,
        format!(
            "{} dyadic blocks, bit-identical across runs and workers {{1, 4, 8}} = {identical}, goldens match = {golden_ok}, final running max {:.6}",
            table.len(),
            table.last().unwrap().running_max
        ),
    );
}

#[test]
fn acceptance() {
    // libtest prints "test acceptance ... " without a newline under --nocapture
    println!();
    let mut results = Vec::new();
    oracle_equivalence(&mut results);
    summatory_agreement(&mut results);
    gauss_mean_value(&mut results);
    voronoi_identity(&mut results);
    bessel_kernel(&mut results);
    fresnel_limits(&mut results);
    abel_exactness(&mut results);
    euler_maclaurin_bound(&mut results);
    closed_form_regression(&mut results);
    boundedness_probes(&mut results);
    running_max_reproducible(&mut results);

    let failed: Vec<_> = results.iter().filter(|r| !r.pass).map(|r| (r.name, r.detail.as_str())).collect();
    println!("{} of {} criteria pass", results.len() - failed.len(), results.len());
    assert!(failed.is_empty(), "failing criteria: {failed:#?}");
}
