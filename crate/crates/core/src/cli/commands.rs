//! One handler per subcommand.

use std::f64::consts::PI;

use serde_json::json;

use super::args::{
    Cli, ClosedFormCmd, Command, ConvergenceArgs, ReportCmd, SamplingKind, SeriesCmd, SweepArgs, TargetKind,
};
use super::output::{read_csv, Cell, Report};
use super::{cache, Outcome, EXIT_VERIFY, SWEEP_COLUMNS};
use crate::analysis::{
    claims_report, convergence_report, ladder_125, sweep_delta, ConvergenceTarget, Sampling, SweepConfig,
    Verdict,
};
use crate::arith::{
    count_enumerate, count_floor_identity, delta_normalized, floor_arg, r2_divisor, r2_enumerate, r2_residue,
    sum_r2, sum_r2_from_table, LatticeRecord, SumMethod,
};
use crate::error::{Error, Result};
use crate::golden::GoldenStore;
use crate::series::{
    d_partial, expint_closed_form, fresnel_closed_form, g_partial, g_partial_dh, m_n_s, p_q_s, s_partial,
    sqrt_closed_form, voronoi_partial, ClosedFormReport,
};
use crate::special::BesselPolicy;

pub(crate) fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::R2 { n } => r2(*n).map(Into::into),
        Command::Sum { x, method } => sum(*x, *method).map(Into::into),
        Command::Delta { x } => delta(*x).map(Into::into),
        Command::Voronoi { x, terms } => voronoi(*x, *terms).map(Into::into),
        Command::Series(cmd) => series(cmd).map(Into::into),
        Command::ClosedForm(cmd) => closed_form(cmd).map(Into::into),
        Command::Sweep(args) => sweep(args),
        Command::Convergence(args) => convergence(args).map(Into::into),
        Command::Report(ReportCmd::Claims { workers, goldens }) => {
            let store = match goldens {
                Some(dir) => GoldenStore::new(dir),
                None => GoldenStore::from_env(),
            };
            claims(&store, *workers)
        }
        Command::Report(ReportCmd::Sweep { input }) => report_sweep(input),
        Command::Verify { limit } => verify(*limit),
    }
}

fn r2(n: u64) -> Result<Report> {
    let e = r2_enumerate(n);
    let d = r2_divisor(n)?;
    let r = r2_residue(n)?;
    let agree = e == d && d == r;
    let mut rep = Report::new("r2", &["n", "enumerate", "divisor", "residue", "agree"]).param("n", n);
    rep.push(vec![n.into(), e.into(), d.into(), r.into(), agree.into()]);
    rep.text = Some(format!("{e} {d} {r} agree={agree}"));
    Ok(rep)
}

fn record_row(r: &LatticeRecord) -> Vec<Cell> {
    vec![r.x.into(), r.count.into(), r.pi_x.into(), r.delta.into(), r.normalized.into()]
}

fn sum(x: f64, method: SumMethod) -> Result<Report> {
    let rec = match method {
        SumMethod::Sieve => sum_r2_from_table(x, &cache::r2_table(floor_arg(x)?)?)?,
        m => sum_r2(x, m)?,
    };
    let mut rep = Report::new("sum", &SWEEP_COLUMNS).param("x", x).param("method", method.to_string());
    rep.push(record_row(&rec));
    Ok(rep)
}

fn delta(x: f64) -> Result<Report> {
    let normalized = delta_normalized(x)?;
    let rec = sum_r2(x, SumMethod::FloorIdentity)?;
    let mut rep = Report::new("delta", &["x", "count", "delta", "normalized"]).param("x", x);
    rep.push(vec![x.into(), rec.count.into(), rec.delta.into(), normalized.into()]);
    Ok(rep)
}

fn voronoi(x: f64, terms: u64) -> Result<Report> {
    let table = cache::r2_table(terms)?;
    let v = voronoi_partial(x, terms, &table, &BesselPolicy::default())?;
    let exact = count_floor_identity(floor_arg(x)?);
    let mut rep = Report::new("voronoi", &["x", "terms", "value", "count", "residual", "last_term"])
        .param("x", x)
        .param("terms", terms);
    rep.push(vec![
        x.into(),
        terms.into(),
        v.value.into(),
        exact.into(),
        (v.value - exact as f64).into(),
        v.tail_estimate.into(),
    ]);
    Ok(rep)
}

fn series(cmd: &SeriesCmd) -> Result<Report> {
    Ok(match *cmd {
        SeriesCmd::S { x, terms } => {
            let v = s_partial(x, terms, &cache::r2_table(terms)?)?;
            let mut rep = Report::new("series s", &["x", "terms", "value", "last_term"])
                .param("x", x)
                .param("terms", terms);
            rep.push(vec![x.into(), terms.into(), v.value.into(), v.tail_estimate.into()]);
            rep
        }
        SeriesCmd::D { x, delta, terms } => {
            let v = d_partial(x, terms, delta)?;
            let mut rep = Report::new("series d", &["x", "delta", "terms", "value", "last_term"])
                .param("x", x)
                .param("delta", delta)
                .param("terms", terms);
            rep.push(vec![x.into(), delta.into(), terms.into(), v.value.into(), v.tail_estimate.into()]);
            rep
        }
        SeriesCmd::G { x, h, terms } => {
            let v = g_partial(h, x, terms)?;
            let dv = g_partial_dh(h, x, terms)?;
            let mut rep = Report::new("series g", &["h", "x", "terms", "value", "dh"])
                .param("h", h)
                .param("x", x)
                .param("terms", terms);
            rep.push(vec![h.into(), x.into(), terms.into(), v.into(), dv.into()]);
            rep
        }
        SeriesCmd::M { a, b, s, k_terms } => {
            let (m, n) = m_n_s(a, b, s, k_terms)?;
            let mut rep = Report::new("series m", &["a", "b", "s", "k_terms", "m", "n"])
                .param("a", a)
                .param("b", b)
                .param("s", s)
                .param("k_terms", k_terms);
            rep.push(vec![a.into(), b.into(), s.into(), k_terms.into(), m.into(), n.into()]);
            rep
        }
        SeriesCmd::P { a, b, s, n_terms, k_terms } => {
            let (p, q) = p_q_s(a, b, s, n_terms, k_terms)?;
            let mut rep =
                Report::new("series p", &["a", "b", "s", "n_terms", "k_terms", "p", "q", "p_last", "q_last"])
                    .param("a", a)
                    .param("b", b)
                    .param("s", s)
                    .param("n_terms", n_terms)
                    .param("k_terms", k_terms);
            rep.push(vec![
                a.into(),
                b.into(),
                s.into(),
                n_terms.into(),
                k_terms.into(),
                p.value.into(),
                q.value.into(),
                p.tail_estimate.into(),
                q.tail_estimate.into(),
            ]);
            rep
        }
    })
}

fn closed_form_report(name: &str, r: &ClosedFormReport) -> Report {
    let mut cols: Vec<&str> = r.params.keys().map(String::as_str).collect();
    cols.extend(["lhs", "rhs", "residual"]);
    let mut rep = Report::new(name, &cols);
    for (k, v) in &r.params {
        rep = rep.param(k, v);
    }
    let mut row: Vec<Cell> = r.params.values().map(|&v| v.into()).collect();
    row.extend([r.lhs_partial.into(), r.rhs_closed.into(), r.residual.into()]);
    rep.push(row);
    rep
}

fn closed_form(cmd: &ClosedFormCmd) -> Result<Report> {
    Ok(match *cmd {
        ClosedFormCmd::Fresnel { a, m } => {
            closed_form_report("closed-form fresnel", &fresnel_closed_form(a, m)?)
        }
        ClosedFormCmd::Expint { eps, x, y } => {
            closed_form_report("closed-form expint", &expint_closed_form(eps, x, y)?)
        }
        ClosedFormCmd::Sqrt { x, m } => closed_form_report("closed-form sqrt", &sqrt_closed_form(x, m)?),
    })
}

fn sweep(args: &SweepArgs) -> Result<Outcome> {
    let sampling = match (args.sampling, args.step) {
        (SamplingKind::Integers, None) => Sampling::Integers,
        (SamplingKind::HalfIntegers, None) => Sampling::HalfIntegers,
        (SamplingKind::Grid, Some(step)) => Sampling::Grid(step),
        (SamplingKind::Grid, None) => return Err(Error::Domain("grid sampling needs --step".into())),
        (_, Some(_)) => return Err(Error::Domain("--step applies only to grid sampling".into())),
    };
    let config = SweepConfig { x_start: args.from, x_end: args.to, sampling, workers: args.workers };
    let s = sweep_delta(&config)?;
    let summary = json!({
        "max_abs_normalized": s.max_abs_normalized,
        "argmax_x": s.argmax_x,
        "mean_count_over_x": s.mean_count_over_x,
        "max_abs_prejump": s.max_abs_prejump.map(|p| p.0),
        "prejump_argmax_x": s.max_abs_prejump.map(|p| p.1),
        "blocks": s.blocks,
    });
    let base = |cols: &[&str]| {
        Report::new("sweep", cols)
            .param("from", args.from)
            .param("to", args.to)
            .param("sampling", config.sampling)
            .param("workers", args.workers)
    };
    let mut rep;
    if args.summary {
        rep = base(&["k", "samples", "block_max", "argmax_x", "running_max", "prejump_max"]);
        for b in &s.blocks {
            rep.push(vec![
                b.k.into(),
                b.samples.into(),
                b.max_abs_normalized.into(),
                b.argmax_x.into(),
                b.running_max.into(),
                b.max_abs_prejump.into(),
            ]);
        }
    } else {
        rep = base(&SWEEP_COLUMNS);
        for r in &s.records {
            rep.push(record_row(r));
        }
    }
    rep.extra.push(("summary".into(), summary));
    let note = format!(
        "records={} max_abs_normalized={} argmax_x={} mean_count_over_x={}",
        s.records.len(),
        s.max_abs_normalized,
        s.argmax_x,
        s.mean_count_over_x
    );
    Ok(Outcome { report: rep, notes: vec![note], status: 0 })
}

fn need(v: Option<f64>, name: &str) -> Result<f64> {
    v.ok_or_else(|| Error::Domain(format!("this target needs --{name}")))
}

fn convergence(args: &ConvergenceArgs) -> Result<Report> {
    let target = match args.target {
        TargetKind::Voronoi => ConvergenceTarget::Voronoi { x: need(args.x, "x")? },
        TargetKind::S => ConvergenceTarget::SPartial { x: need(args.x, "x")? },
        TargetKind::D => {
            ConvergenceTarget::DPartial { x: need(args.x, "x")?, delta: need(args.delta, "delta")? }
        }
        TargetKind::P | TargetKind::Q => ConvergenceTarget::PQ {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
            s: need(args.s, "s")?,
            k_terms: args.k_terms.ok_or_else(|| Error::Domain("this target needs --k-terms".into()))?,
            sine: args.target == TargetKind::Q,
        },
    };
    let ladder = if args.ladder.is_empty() { ladder_125(args.top) } else { args.ladder.clone() };
    let table = match target {
        ConvergenceTarget::Voronoi { .. } | ConvergenceTarget::SPartial { .. } => {
            Some(cache::r2_table(*ladder.iter().max().unwrap_or(&1))?)
        }
        _ => None,
    };
    let r = convergence_report(target, &ladder, args.window, table.as_ref())?;
    let mut rep = Report::new(
        "convergence",
        &[
            "terms",
            "value",
            "window_mean",
            "residual",
            "windowed_residual",
            "windowed_increment",
            "sup_so_far",
        ],
    )
    .param("target", target)
    .param("window", args.window);
    if let Some(reference) = r.reference {
        rep = rep.param("reference", reference);
    }
    for row in &r.rows {
        rep.push(vec![
            row.terms.into(),
            row.value.into(),
            row.window_mean.into(),
            row.residual.into(),
            row.windowed_residual.into(),
            row.windowed_increment.into(),
            row.sup_so_far.into(),
        ]);
    }
    Ok(rep)
}

fn claims(store: &GoldenStore, workers: usize) -> Result<Outcome> {
    let r = claims_report(store, workers)?;
    let mut rep = Report::new(
        "report claims",
        &["k", "block_max", "argmax_x", "running_max", "prejump_max", "golden_running_max", "matches_golden"],
    )
    .param("workers", workers)
    .param("goldens", store.dir().display().to_string());
    for row in &r.running_max {
        rep.push(vec![
            row.k.into(),
            row.block_max.into(),
            row.argmax_x.into(),
            row.running_max.into(),
            row.prejump_max.into(),
            row.golden_running_max.into(),
            row.matches_golden.into(),
        ]);
    }
    rep.extra.push(("claims".into(), serde_json::to_value(&r.claims)?));

    let verdict = |v: Verdict| match v {
        Verdict::Consistent => "consistent",
        Verdict::Tension => "tension",
        Verdict::OutOfReach => "out-of-reach",
    };
    let mut text = String::new();
    for c in &r.claims {
        text += &format!("{:<30} {:<13} {:<24} {}\n", c.id, verdict(c.verdict), c.value, c.statistic);
    }
    text += "\n k  block_max            running_max\n";
    for row in &r.running_max {
        text += &format!("{:>2}  {:<20} {}\n", row.k, row.block_max, row.running_max);
    }
    rep.text = Some(text.trim_end().to_string());
    Ok(rep.into())
}

/// Largest tolerated `|delta − (count − πx)| / max(|delta|, 1)`; files
/// written with at least 8 significant digits stay well inside it.
const SWEEP_MISMATCH_TOLERANCE: f64 = 1e-6;

fn report_sweep(input: &std::path::Path) -> Result<Outcome> {
    let rows = read_csv(input, &SWEEP_COLUMNS)?;
    if rows.is_empty() {
        return Err(Error::Format(format!("{}: no records", input.display())));
    }
    let num = |rec: &csv::StringRecord, i: usize| -> Result<f64> {
        rec[i].parse().map_err(|_| Error::Format(format!("not a number: `{}`", &rec[i])))
    };
    let (mut best, mut argmax, mut ratio, mut mismatch) = (0.0f64, 0.0, 0.0, 0.0f64);
    for rec in &rows {
        let x = num(rec, 0)?;
        let count: u64 = rec[1].parse().map_err(|_| Error::Format(format!("not a count: `{}`", &rec[1])))?;
        let d = num(rec, 3)?;
        mismatch = mismatch.max((d - (count as f64 - PI * x)).abs() / d.abs().max(1.0));
        if !rec[4].is_empty() {
            let v = num(rec, 4)?.abs();
            if v > best {
                best = v;
                argmax = x;
            }
        }
        ratio += count as f64 / x;
    }
    let mut rep = Report::new(
        "report sweep",
        &["records", "max_abs_normalized", "argmax_x", "mean_count_over_x", "max_delta_mismatch"],
    )
    .param("input", input.display().to_string());
    rep.push(vec![
        (rows.len() as u64).into(),
        best.into(),
        argmax.into(),
        (ratio / rows.len() as f64).into(),
        mismatch.into(),
    ]);
    let ok = mismatch <= SWEEP_MISMATCH_TOLERANCE;
    let notes = if ok {
        Vec::new()
    } else {
        vec![format!("delta column disagrees with count - pi*x (mismatch {mismatch:e})")]
    };
    Ok(Outcome { report: rep, notes, status: if ok { 0 } else { EXIT_VERIFY } })
}

fn verify(limit: u64) -> Result<Outcome> {
    if limit == 0 {
        return Err(Error::Domain("limit must be at least 1".into()));
    }
    let mut rep = Report::new("verify", &["check", "detail", "pass"]).param("limit", limit);
    let mut first_bad = None;
    for n in 1..=limit {
        let e = r2_enumerate(n);
        if r2_divisor(n)? != e || r2_residue(n)? != e {
            first_bad = Some(n);
            break;
        }
    }
    let mut ok = first_bad.is_none();
    rep.push(vec![
        "r2_three_way".into(),
        match first_bad {
            None => format!("1..={limit}"),
            Some(n) => format!("first disagreement at n = {n}"),
        }
        .into(),
        first_bad.is_none().into(),
    ]);
    for k in 1..=6 {
        let x = 10u64.pow(k);
        let e = count_enumerate(x);
        let f = count_floor_identity(x);
        let s = sum_r2_from_table(x as f64, &cache::r2_table(x)?)?.count;
        let pass = e == f && f == s;
        ok &= pass;
        rep.push(vec![
            "count_three_way".into(),
            format!("x = 1e{k}: enumerate {e}, floor {f}, sieve {s}").into(),
            pass.into(),
        ]);
    }
    Ok(Outcome { report: rep, notes: Vec::new(), status: if ok { 0 } else { EXIT_VERIFY } })
}
