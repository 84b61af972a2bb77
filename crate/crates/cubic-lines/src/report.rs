//! JSON report types. Field elements are written as strings in the polynomial
//! grammar (`-1/2 + 3*w`), so every report can be fed back as input.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use cubic_lines_core::census::{CensusReport, CensusUnresolved, TripleLine};
use cubic_lines_core::grassmann::{pluecker_from_span, LineSpan};
use cubic_lines_core::FieldElement;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::CliError;

pub fn elem(x: &FieldElement) -> String {
    x.to_string()
}

pub fn elems(xs: &[FieldElement]) -> Vec<String> {
    xs.iter().map(elem).collect()
}

/// `{"p02": "1", ...}` in the given name order.
pub fn named(names: &[String], values: &[FieldElement]) -> Map<String, Value> {
    names.iter().zip(values).map(|(n, v)| (n.clone(), Value::String(elem(v)))).collect()
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct LineJson {
    /// The two spanning vectors as given.
    pub span: [Vec<String>; 2],
    /// p01..p34, scaled so the first nonzero coordinate is 1.
    pub pluecker: Vec<String>,
    pub stratum: String,
}

impl LineJson {
    pub fn new(line: &LineSpan) -> Self {
        let p = pluecker_from_span(line).normalized();
        LineJson { span: [elems(line.v0()), elems(line.v1())], pluecker: elems(p.coords()), stratum: p.stratum().to_string() }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct ClassifyReport {
    pub cubic: String,
    pub field: &'static str,
    pub line: LineJson,
    pub on_cubic: bool,
    #[serde(rename = "type")]
    pub line_type: Option<&'static str>,
    /// Tangent direction over x2, x3, x4 after moving the line to span(e0, e1).
    pub alpha: Option<Vec<String>>,
    /// A point spanning the tangent plane together with the line, in input coordinates.
    pub tangent_point: Option<Vec<String>>,
    pub is_triple: Option<bool>,
    pub residual_shape: Option<&'static str>,
    /// In plane coordinates (t0, t1, t2), the line itself being t2 = 0.
    pub residual_line: Option<String>,
    pub fano_tangent_dim: Option<usize>,
    pub m_jacobian_rank: Option<usize>,
    pub murre_a0: Option<String>,
    pub murre_a1: Option<String>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct CensusLineJson {
    pub chart: Map<String, Value>,
    pub line: LineJson,
    /// Tangent direction over the stratum's non-pivot columns.
    pub alpha: Vec<String>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct UnresolvedJson {
    pub alpha_chart: usize,
    pub variable: String,
    pub assignment: Map<String, Value>,
    /// Univariate polynomial with no root in the field.
    pub factor: String,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct StratumJson {
    pub pivot: String,
    pub count: usize,
    pub lines: Vec<CensusLineJson>,
    pub unresolved: Vec<UnresolvedJson>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct CensusJson {
    pub cubic: String,
    pub field: &'static str,
    pub smooth: bool,
    pub strata: Vec<StratumJson>,
    pub total: usize,
    /// False when some factor had no root in the field; `total` is then a lower bound.
    pub complete: bool,
}

fn census_line(l: &TripleLine) -> CensusLineJson {
    let names = cubic_lines_core::grassmann::stratum_parameterization(l.stratum).ring.names().to_vec();
    CensusLineJson { chart: named(&names, &l.chart_coords), line: LineJson::new(&l.line), alpha: elems(&l.alpha) }
}

fn unresolved(u: &CensusUnresolved) -> UnresolvedJson {
    UnresolvedJson {
        alpha_chart: u.alpha_chart,
        variable: u.factor.variable.clone(),
        assignment: u.factor.assignment.iter().map(|(n, v)| (n.clone(), Value::String(elem(v)))).collect(),
        factor: u.factor.to_poly().to_string(),
    }
}

impl CensusJson {
    pub fn new(cubic: String, field: &'static str, r: &CensusReport) -> Self {
        let strata = r
            .strata
            .iter()
            .map(|s| StratumJson {
                pivot: s.stratum.to_string(),
                count: s.count(),
                lines: s.lines.iter().map(census_line).collect(),
                unresolved: s.unresolved.iter().map(unresolved).collect(),
            })
            .collect();
        CensusJson { cubic, field, smooth: r.smooth, strata, total: r.total(), complete: r.is_complete() }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct PointCheck {
    pub line: LineJson,
    pub is_triple: bool,
    pub m_jacobian_rank: usize,
    /// `is_triple` agrees with `m_jacobian_rank <= 4`.
    pub pass: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct SampleJson {
    pub stratum: String,
    /// Coefficients of the six chart unknowns, then the constant term.
    pub slice: Vec<String>,
    pub through_given_line: bool,
    pub points: Vec<PointCheck>,
    /// Solutions found modulo a large prime that have no small-height lift.
    pub unlifted: usize,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct VerifyJson {
    pub cubic: String,
    pub field: &'static str,
    pub census_total: usize,
    pub census_complete: bool,
    pub triple_lines: Vec<PointCheck>,
    pub given_line: Option<PointCheck>,
    pub samples: Vec<SampleJson>,
    pub checked: usize,
    pub counterexamples: usize,
    pub pass: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct SmoothJson {
    pub cubic: String,
    pub smooth: bool,
    /// A singular point over the working field, when one was found.
    pub witness: Option<Vec<String>>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct TangentJson {
    pub cubic: String,
    pub line: LineJson,
    pub dimension: usize,
    /// Kernel vectors in the chart p01 = 1 of the line moved to span(e0, e1).
    pub basis: Vec<Map<String, Value>>,
}

pub fn pair_names(pairs: &[(usize, usize)]) -> Vec<String> {
    pairs.iter().map(|&(a, b)| cubic_lines_core::grassmann::pair_name(a, b)).collect()
}

pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

/// Indented `key: value` text for a report.
pub fn render_human(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).expect("flat")).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Object(m) if m.len() <= 6 && m.values().all(|x| !x.is_object() && scalar(x).is_some()) => Some(format!(
            "{{{}}}",
            m.iter().map(|(k, x)| format!("{}: {}", k, scalar(x).expect("flat"))).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => writeln!(out, "{}{}: {}", pad, k, s).expect("string write"),
                    None => {
                        writeln!(out, "{}{}:", pad, k).expect("string write");
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => writeln!(out, "{}- {}", pad, s).expect("string write"),
                    None => {
                        writeln!(out, "{}-", pad).expect("string write");
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => writeln!(out, "{}{}", pad, scalar(other).expect("scalar")).expect("string write"),
    }
}

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never see a partial report.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| CliError::Io(format!("{}: {}", path.display(), e));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn human_rendering_follows_the_json() {
        let v = json!({"total": 3, "strata": [{"pivot": "(0,1)", "lines": [{"alpha": ["0", "1"]}]}], "smooth": true});
        let text = render_human(&v);
        assert_eq!(text, "total: 3\nstrata:\n  -\n    pivot: (0,1)\n    lines:\n      - {alpha: [0, 1]}\nsmooth: true\n");
    }

    #[test]
    fn atomic_write_replaces_the_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.json");
        write_atomic(&p, "one").unwrap();
        write_atomic(&p, "two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
