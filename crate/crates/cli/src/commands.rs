use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use surfineq::axisym::{simon_report, surface_quantities, topping_deficit, Family, Surface, SurfaceQuantities};
use surfineq::convex::convex_inequality_suite;
use surfineq::curve::{constants, extremal_curve, strip_energy_bound};
use surfineq::flow::rate_check;
use surfineq::io::{write_curve, SweepSpec};
use surfineq::rearrange::comparison_report;
use surfineq::{Error, InequalityReport, Result};

use crate::output::{reports, table, Output};

#[derive(Serialize)]
struct QuantityRow<'a> {
    surface: &'a str,
    n: usize,
    delta: Option<f64>,
    seed: Option<u64>,
    #[serde(flatten)]
    q: SurfaceQuantities,
}

fn quantity_row(s: &Surface) -> QuantityRow<'_> {
    QuantityRow { surface: &s.name, n: s.curve.n(), delta: s.delta, seed: s.seed, q: surface_quantities(&s.curve) }
}

pub fn quantities(s: &Surface) -> Result<Output> {
    let row = quantity_row(s);
    let summary = serde_json::to_value(&row).expect("row serializes");
    Ok(Output { csv: table(&[row])?, summary, failures: Vec::new(), files: Vec::new() })
}

pub fn constants_table(ps: &[f64]) -> Result<Output> {
    let rows = ps.iter().map(|&p| constants(p)).collect::<Result<Vec<_>>>()?;
    let summary = json!({ "constants": rows });
    Ok(Output { csv: table(&rows)?, summary, failures: Vec::new(), files: Vec::new() })
}

#[derive(Serialize)]
struct ExtremalRow {
    p: f64,
    a_limit: f64,
    quarter_length: f64,
    junction_curvature: f64,
    min_width: f64,
    energy: f64,
    bound: f64,
    ratio: f64,
}

pub fn extremal(p: f64, n: usize) -> Result<Output> {
    let e = extremal_curve(p, n)?;
    let rep = strip_energy_bound(&e.curve, p)?;
    let row = ExtremalRow {
        p,
        a_limit: e.a_limit,
        quarter_length: e.quarter_length,
        junction_curvature: e.junction_curvature,
        min_width: e.curve.min_width(),
        energy: rep.lhs,
        bound: rep.rhs,
        ratio: rep.ratio(),
    };
    let summary = json!({ "extremal": row, "strip_energy_bound": rep });
    let files = vec![("extremal_curve.txt".to_string(), write_curve(&e.angle))];
    Ok(Output { csv: table(&[row])?, summary, failures: Vec::new(), files })
}

#[derive(Serialize)]
struct FlowRow<'a> {
    surface: &'a str,
    n: usize,
    #[serde(flatten)]
    probe: surfineq::flow::FlowProbe,
}

pub fn flow(s: &Surface, tau: f64) -> Result<Output> {
    let probe = rate_check(&s.curve, tau)?;
    let failures = if probe.agrees {
        Vec::new()
    } else {
        vec![format!("{}: analytic rate {} vs central difference {}", s.name, probe.analytic_rate, probe.fd_rate)]
    };
    let row = FlowRow { surface: &s.name, n: s.curve.n(), probe };
    let summary = serde_json::to_value(&row).expect("row serializes");
    Ok(Output { csv: table(&[row])?, summary, failures, files: Vec::new() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Topping,
    Convex,
    Simon,
    All,
}

impl Suite {
    fn parse(name: &str) -> Result<Suite> {
        <Suite as clap::ValueEnum>::from_str(name, true).map_err(|_| Error::Parse(format!("unknown suite `{name}`")))
    }
}

/// Reports of one suite on one surface. Under `all` the convex suite is
/// skipped for nonconvex profiles; asked for explicitly it is a precondition.
fn suite_reports(s: &Surface, suite: Suite, ps: &[f64]) -> Result<Vec<InequalityReport>> {
    let g = &s.curve;
    let mut out = Vec::new();
    if matches!(suite, Suite::Topping | Suite::All) {
        let t = topping_deficit(g);
        let deficit = t.report.deficit;
        out.push(t.report);
        out.push(InequalityReport::record("topping-deficit-over-U", deficit, t.u));
        out.push(InequalityReport::record("topping-deficit-over-V", deficit, t.v_remainder));
    }
    if suite == Suite::Convex || (suite == Suite::All && g.is_convex()) {
        let mollified = s.family.is_some_and(|f| f.is_mollified());
        out.extend(convex_inequality_suite(g, ps, mollified)?);
    }
    if matches!(suite, Suite::Simon | Suite::All) {
        out.extend(simon_report(g));
    }
    Ok(out.into_iter().map(|r| r.on(&s.name, g.n(), s.delta).with_seed(s.seed)).collect())
}

fn build_all(members: &[Family], n: usize, delta: Option<f64>) -> Result<Vec<Surface>> {
    members.par_iter().map(|f| f.build(n, delta)).collect()
}

pub fn verify(surfaces: &[Surface], suites: &[Suite], ps: &[f64]) -> Result<Output> {
    let per_surface: Vec<Vec<InequalityReport>> = surfaces
        .par_iter()
        .map(|s| {
            let mut v = Vec::new();
            for &suite in suites {
                v.extend(suite_reports(s, suite, ps)?);
            }
            Ok(v)
        })
        .collect::<Result<_>>()?;
    let rows: Vec<InequalityReport> = per_surface.into_iter().flatten().collect();
    let names: Vec<&str> = surfaces.iter().map(|s| s.name.as_str()).collect();
    reports(rows, json!({ "surfaces": names, "suites": suites, "p": ps }))
}

pub fn verify_sweep(spec: &SweepSpec, suites: &[Suite], ps: &[f64]) -> Result<Output> {
    let surfaces = build_all(&spec.members()?, spec.n, spec.delta)?;
    verify(&surfaces, suites, ps)
}

#[derive(Serialize)]
struct StageRow {
    stage: &'static str,
    total_abs_h: f64,
    diameter: f64,
}

pub fn rearrange(s: &Surface) -> Result<Output> {
    let r = match comparison_report(&s.curve) {
        Ok(r) => r,
        Err(e @ Error::Verification { .. }) => {
            let msg = format!("{}: {e}", s.name);
            return Ok(Output {
                csv: String::new(),
                summary: json!({ "surface": s.name, "error": msg }),
                failures: vec![msg],
                files: Vec::new(),
            });
        }
        Err(e) => return Err(e),
    };
    let rows = [
        StageRow { stage: "original", total_abs_h: r.original.total_abs_h, diameter: r.original.diameter },
        StageRow { stage: "sharp", total_abs_h: r.sharp.total_abs_h, diameter: r.sharp.diameter },
        StageRow { stage: "star", total_abs_h: r.star.total_abs_h, diameter: r.star.diameter },
    ];
    let summary = json!({
        "surface": s.name,
        "n": s.curve.n(),
        "stages": rows,
        "encloses_sharp": r.enclosure,
        "encloses_original": r.encloses_original,
        "measure_residual": r.measure_residual,
    });
    let files = vec![
        ("theta.txt".to_string(), write_curve(&r.theta)),
        ("theta_sharp.txt".to_string(), write_curve(&r.theta_sharp)),
        ("theta_star.txt".to_string(), write_curve(&r.theta_star)),
    ];
    Ok(Output { csv: table(&rows)?, summary, failures: Vec::new(), files })
}

#[derive(Serialize)]
struct SweepRow<'a> {
    #[serde(flatten)]
    base: QuantityRow<'a>,
    u: f64,
    v_remainder: f64,
    topping_deficit: f64,
}

/// Quantities of every member, plus the spec's suites when it names any.
pub fn sweep(spec: &SweepSpec, ps: &[f64]) -> Result<Output> {
    let suites = spec.suites.iter().map(|s| Suite::parse(s)).collect::<Result<Vec<_>>>()?;
    let surfaces = build_all(&spec.members()?, spec.n, spec.delta)?;
    let rows: Vec<SweepRow> = surfaces
        .par_iter()
        .map(|s| {
            let t = topping_deficit(&s.curve);
            SweepRow { base: quantity_row(s), u: t.u, v_remainder: t.v_remainder, topping_deficit: t.report.deficit }
        })
        .collect();
    let mut out = Output {
        csv: table(&rows)?,
        summary: json!({ "spec": spec, "members": rows.len() }),
        failures: Vec::new(),
        files: Vec::new(),
    };
    if !suites.is_empty() {
        let v = verify(&surfaces, &suites, ps)?;
        out.summary["verification"] = v.summary;
        out.files.push(("sweep_reports.csv".to_string(), v.csv));
        out.failures = v.failures;
    }
    Ok(out)
}
