//! One function per command. Each returns the report as JSON together with the
//! exit code; errors that leave no report come back as [`CliError`].

use std::time::Instant;

use cubic_lines_core::census::{slice_second_type, CensusOptions, CensusReport};
use cubic_lines_core::classify::{
    classify, classify_detailed, fano_tangent_space, m_curve_jacobian_rank, murre_normal_form, ClassifyOptions,
    LineType,
};
use cubic_lines_core::grassmann::{LineSpan, Stratum};
use cubic_lines_core::ideal::SolveConfig;
use cubic_lines_core::threefold::CubicThreefold;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::config::{CommandKind, LineSource, RunConfig};
use crate::error::{exit, CliError};
use crate::input::{load_cubic, parse_line_pluecker, parse_line_span};
use crate::parallel;
use crate::report::*;
use crate::sample::{chart_point, random_slice};

/// A finished command: the report, its exit code, and diagnostics for stderr.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub exit: u8,
    pub diagnostics: Vec<String>,
}

impl Outcome {
    fn new<T: Serialize>(report: &T, exit: u8) -> Self {
        Outcome { report: serde_json::to_value(report).expect("reports serialize"), exit, diagnostics: Vec::new() }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        CommandKind::Classify => cmd_classify(cfg),
        CommandKind::Census => cmd_census(cfg),
        CommandKind::VerifyTheorem => cmd_verify_theorem(cfg),
        CommandKind::Smooth => cmd_smooth(cfg),
        CommandKind::Tangent => cmd_tangent(cfg),
    }
}

fn cubic(cfg: &RunConfig) -> Result<CubicThreefold, CliError> {
    load_cubic(&cfg.cubic, cfg.field)
}

fn line(cfg: &RunConfig) -> Result<Option<LineSpan>, CliError> {
    match &cfg.line {
        Some(LineSource::Span(s)) => parse_line_span(s, cfg.field).map(Some),
        Some(LineSource::Pluecker(p)) => parse_line_pluecker(p, cfg.field).map(Some),
        None => Ok(None),
    }
}

fn required_line(cfg: &RunConfig) -> Result<LineSpan, CliError> {
    line(cfg)?.ok_or_else(|| CliError::Usage("this command needs --line-span or --line-pluecker".into()))
}

fn solve_config(cfg: &RunConfig) -> SolveConfig {
    SolveConfig { groebner: cfg.groebner, field: cfg.field }
}

fn classify_options(cfg: &RunConfig, check_smooth: bool) -> ClassifyOptions {
    ClassifyOptions { check_smooth, groebner: cfg.groebner }
}

/// Classification of one line with everything derived from it. A line that is
/// not on the cubic still gets a report, with exit code 3.
pub fn classify_report(x: &CubicThreefold, l: &LineSpan, cfg: &RunConfig) -> Result<(ClassifyReport, u8), CliError> {
    let mut r = ClassifyReport {
        cubic: x.poly().to_string(),
        field: cfg.field.name(),
        line: LineJson::new(l),
        on_cubic: x.contains_line(l),
        line_type: None,
        alpha: None,
        tangent_point: None,
        is_triple: None,
        residual_shape: None,
        residual_line: None,
        fano_tangent_dim: None,
        m_jacobian_rank: None,
        murre_a0: None,
        murre_a1: None,
    };
    if !r.on_cubic {
        return Ok((r, exit::NOT_ON_CUBIC));
    }
    let c = classify_detailed(x, l, &classify_options(cfg, !cfg.allow_singular))?;
    r.line_type = Some(c.line_type.name());
    r.fano_tangent_dim = Some(fano_tangent_space(x, l)?.0);
    if let LineType::SecondType(d) = &c.line_type {
        r.alpha = Some(elems(&d.alpha));
        r.tangent_point = Some(elems(&d.tangent_point));
        r.is_triple = Some(d.is_triple);
        r.residual_shape = Some(d.residual.shape.name());
        r.residual_line = d.residual.residual_line().map(|p| p.to_string());
        r.m_jacobian_rank = Some(m_curve_jacobian_rank(x, l)?);
        let murre = murre_normal_form(x, l, &classify_options(cfg, false))?;
        r.murre_a0 = Some(elem(&murre.a0));
        r.murre_a1 = Some(elem(&murre.a1));
    } else {
        r.is_triple = Some(false);
    }
    Ok((r, exit::OK))
}

fn cmd_classify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let x = cubic(cfg)?;
    let l = required_line(cfg)?;
    let (r, code) = classify_report(&x, &l, cfg)?;
    Ok(Outcome::new(&r, code))
}

fn census_options(cfg: &RunConfig) -> CensusOptions {
    CensusOptions { solve: solve_config(cfg), allow_singular: cfg.allow_singular, strata: cfg.strata.clone() }
}

fn run_census(x: &CubicThreefold, cfg: &RunConfig, diagnostics: &mut Vec<String>) -> Result<CensusReport, CliError> {
    let start = Instant::now();
    let (report, timings) = parallel::census(x, &census_options(cfg), cfg.jobs)?;
    for (s, t) in timings {
        diagnostics.push(format!("census: stratum {} took {:.3}s", s, t.as_secs_f64()));
    }
    diagnostics.push(format!(
        "census: {} triple lines in {:.3}s on {} worker(s)",
        report.total(),
        start.elapsed().as_secs_f64(),
        cfg.jobs
    ));
    Ok(report)
}

fn cmd_census(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let x = cubic(cfg)?;
    let mut diagnostics = Vec::new();
    let report = run_census(&x, cfg, &mut diagnostics)?;
    let json = CensusJson::new(x.poly().to_string(), cfg.field.name(), &report);
    let code = if report.is_complete() { exit::OK } else { exit::UNRESOLVED };
    let mut out = Outcome::new(&json, code);
    out.diagnostics = diagnostics;
    Ok(out)
}

/// Triple-ness against the Jacobian rank of the second-type curve at one line.
/// `None` for lines of the first type, where the curve does not pass.
pub fn check_point(x: &CubicThreefold, l: &LineSpan, cfg: &RunConfig) -> Result<Option<PointCheck>, CliError> {
    let t = classify(x, l, &classify_options(cfg, false))?;
    if !t.is_second_type() {
        return Ok(None);
    }
    let rank = m_curve_jacobian_rank(x, l)?;
    let is_triple = t.is_triple();
    Ok(Some(PointCheck { line: LineJson::new(l), is_triple, m_jacobian_rank: rank, pass: is_triple == (rank <= 4) }))
}

fn sample(
    x: &CubicThreefold,
    s: Stratum,
    slice: [cubic_lines_core::FieldElement; 7],
    through_given_line: bool,
    cfg: &RunConfig,
) -> Result<SampleJson, CliError> {
    let found = slice_second_type(x, s, &slice, &solve_config(cfg))?;
    let mut points = Vec::new();
    for p in &found.points {
        match check_point(x, &p.line, cfg)? {
            Some(c) => points.push(c),
            None => {
                return Err(CliError::Core(cubic_lines_core::Error::Internal(format!(
                    "slice point {} is not of the second type",
                    p.line
                ))))
            }
        }
    }
    Ok(SampleJson { stratum: s.to_string(), slice: elems(&slice), through_given_line, points, unlifted: found.unlifted })
}

fn cmd_verify_theorem(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let x = cubic(cfg)?;
    let given = line(cfg)?;
    if let Some(l) = &given {
        if !x.contains_line(l) {
            return Err(CliError::Core(cubic_lines_core::Error::LineNotOnCubic));
        }
    }
    let mut diagnostics = Vec::new();
    let census = run_census(&x, cfg, &mut diagnostics)?;
    let start = Instant::now();

    let mut triple_lines = Vec::new();
    for t in census.lines() {
        let rank = m_curve_jacobian_rank(&x, &t.line)?;
        triple_lines.push(PointCheck { line: LineJson::new(&t.line), is_triple: true, m_jacobian_rank: rank, pass: rank <= 4 });
    }
    let given_line = match &given {
        Some(l) => check_point(&x, l, cfg)?,
        None => None,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut samples = Vec::new();
    let strata = cfg.strata.clone().unwrap_or_else(|| Stratum::all().to_vec());
    for &s in &strata {
        for _ in 0..cfg.samples {
            samples.push(sample(&x, s, random_slice(&mut rng, 5, None), false, cfg)?);
        }
    }
    // random slices rarely meet a point of small height, so slices through the
    // given line are what exercise the non-triple side
    if let (Some(l), Some(_)) = (&given, &given_line) {
        let (s, u) = chart_point(l);
        for _ in 0..cfg.samples {
            samples.push(sample(&x, s, random_slice(&mut rng, 5, Some(&u)), true, cfg)?);
        }
    }

    let all: Vec<&PointCheck> = triple_lines
        .iter()
        .chain(given_line.iter())
        .chain(samples.iter().flat_map(|s| s.points.iter()))
        .collect();
    let counterexamples = all.iter().filter(|c| !c.pass).count();
    for c in all.iter().filter(|c| !c.pass) {
        diagnostics.push(format!(
            "counterexample: line {} is_triple={} rank={}",
            c.line.span.iter().map(|r| r.join(",")).collect::<Vec<_>>().join(";"),
            c.is_triple,
            c.m_jacobian_rank
        ));
    }
    diagnostics.push(format!("verify-theorem: {} checks in {:.3}s", all.len(), start.elapsed().as_secs_f64()));
    let report = VerifyJson {
        cubic: x.poly().to_string(),
        field: cfg.field.name(),
        census_total: census.total(),
        census_complete: census.is_complete(),
        checked: all.len(),
        counterexamples,
        pass: counterexamples == 0,
        triple_lines,
        given_line,
        samples,
    };
    let code = if counterexamples > 0 { exit::COUNTEREXAMPLE } else { exit::OK };
    let mut out = Outcome::new(&report, code);
    out.diagnostics = diagnostics;
    Ok(out)
}

fn cmd_smooth(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let x = cubic(cfg)?;
    let smooth = x.is_smooth(&cfg.groebner)?;
    let witness = if smooth {
        None
    } else {
        x.singular_point(&cfg.groebner)?.filter(|p| p.iter().all(|c| cfg.field.contains(c))).map(|p| elems(&p))
    };
    Ok(Outcome::new(&SmoothJson { cubic: x.poly().to_string(), smooth, witness }, exit::OK))
}

fn cmd_tangent(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let x = cubic(cfg)?;
    let l = required_line(cfg)?;
    let (dimension, basis) = fano_tangent_space(&x, &l)?;
    let names = pair_names(&[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
    let basis = basis.iter().map(|v| named(&names, v)).collect();
    Ok(Outcome::new(&TangentJson { cubic: x.poly().to_string(), line: LineJson::new(&l), dimension, basis }, exit::OK))
}
