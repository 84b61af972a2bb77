//! Command-line flags, the optional TOML config file, and their merge into a
//! [`RunConfig`]. The file uses the flag names with `_` for `-`; flags win.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cubic_lines_core::grassmann::Stratum;
use cubic_lines_core::{Field, GroebnerConfig};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "cubic-lines", version, about = "Lines of the second type and triple lines on cubic threefolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandKind,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Subcommand, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    /// Classify one line on a cubic.
    Classify,
    /// Find all triple lines.
    Census,
    /// Test triple-ness against the Jacobian rank of the second-type curve.
    VerifyTheorem,
    /// Decide smoothness.
    Smooth,
    /// Tangent space of the Fano surface at a line.
    Tangent,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
pub enum FieldArg {
    #[value(name = "Q")]
    #[serde(rename = "Q")]
    Q,
    #[value(name = "Qw", alias = "Q(w)")]
    #[serde(rename = "Qw", alias = "Q(w)")]
    Qw,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Q => Field::Rational,
            FieldArg::Qw => Field::Eisenstein,
        }
    }
}

#[derive(clap::Args, Debug, Default)]
pub struct Flags {
    /// Cubic in x0..x4: a file (text or JSON term list) or inline text.
    #[arg(long, global = true)]
    pub cubic: Option<String>,
    /// Line as two spanning vectors, "a0,..,a4;b0,..,b4".
    #[arg(long, global = true)]
    pub line_span: Option<String>,
    /// Line as Plücker coordinates p01,p02,p03,p04,p12,p13,p14,p23,p24,p34.
    #[arg(long, global = true)]
    pub line_pluecker: Option<String>,
    /// Coefficient field for inputs and solutions.
    #[arg(long, global = true, value_enum)]
    pub field: Option<FieldArg>,
    /// Restrict the census to the stratum "i,j"; repeatable.
    #[arg(long, global = true)]
    pub stratum: Vec<String>,
    /// Proceed on singular cubics.
    #[arg(long, global = true)]
    pub allow_singular: bool,
    /// Worker threads for the census.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Maximum number of S-pairs per Gröbner basis.
    #[arg(long, global = true)]
    pub gb_max_pairs: Option<usize>,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Random slices per stratum for verify-theorem.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Seed for the slices of verify-theorem.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// TOML file with defaults for any of the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    cubic: Option<String>,
    line_span: Option<String>,
    line_pluecker: Option<String>,
    field: Option<FieldArg>,
    stratum: Option<Vec<String>>,
    allow_singular: Option<bool>,
    jobs: Option<usize>,
    gb_max_pairs: Option<usize>,
    output: Option<PathBuf>,
    json: Option<bool>,
    samples: Option<usize>,
    seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineSource {
    Span(String),
    Pluecker(String),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub cubic: String,
    pub line: Option<LineSource>,
    pub field: Field,
    pub strata: Option<Vec<Stratum>>,
    pub allow_singular: bool,
    pub jobs: usize,
    pub groebner: GroebnerConfig,
    pub output: Option<PathBuf>,
    pub json: bool,
    pub samples: usize,
    pub seed: u64,
}

impl RunConfig {
    /// Defaults for everything but the command and the cubic.
    pub fn new(command: CommandKind, cubic: impl Into<String>) -> Self {
        RunConfig {
            command,
            cubic: cubic.into(),
            line: None,
            field: Field::Eisenstein,
            strata: None,
            allow_singular: false,
            jobs: default_jobs(),
            groebner: GroebnerConfig::default(),
            output: None,
            json: false,
            samples: 2,
            seed: 0,
        }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn parse_stratum(text: &str) -> Result<Stratum, CliError> {
    let bad = || CliError::Parse(format!("stratum `{}`: expected \"i,j\" with 0 <= i < j <= 4", text));
    let (i, j) = text.trim().trim_start_matches('(').trim_end_matches(')').split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse().map_err(|_| bad())?;
    let j = j.trim().parse().map_err(|_| bad())?;
    Stratum::new(i, j).map_err(|_| bad())
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let f = self.flags;
        let file = match &f.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
                toml::from_str::<FileConfig>(&text)
                    .map_err(|e| CliError::Parse(format!("{}: {}", path.display(), e)))?
            }
            None => FileConfig::default(),
        };
        let cubic = f.cubic.or(file.cubic).ok_or_else(|| CliError::Usage("--cubic is required".into()))?;
        let mut cfg = RunConfig::new(self.command, cubic);
        // a line given on the command line replaces any line from the file
        let (span, pluecker) = if f.line_span.is_some() || f.line_pluecker.is_some() {
            (f.line_span, f.line_pluecker)
        } else {
            (file.line_span, file.line_pluecker)
        };
        cfg.line = match (span, pluecker) {
            (Some(_), Some(_)) => {
                return Err(CliError::Usage("give either --line-span or --line-pluecker, not both".into()))
            }
            (Some(s), None) => Some(LineSource::Span(s)),
            (None, Some(p)) => Some(LineSource::Pluecker(p)),
            (None, None) => None,
        };
        if let Some(field) = f.field.or(file.field) {
            cfg.field = field.into();
        }
        let strata = if f.stratum.is_empty() { file.stratum.unwrap_or_default() } else { f.stratum };
        if !strata.is_empty() {
            let mut parsed = strata.iter().map(|s| parse_stratum(s)).collect::<Result<Vec<_>, _>>()?;
            parsed.sort();
            parsed.dedup();
            cfg.strata = Some(parsed);
        }
        cfg.allow_singular = f.allow_singular || file.allow_singular.unwrap_or(false);
        cfg.jobs = f.jobs.or(file.jobs).unwrap_or(cfg.jobs);
        if let Some(n) = f.gb_max_pairs.or(file.gb_max_pairs) {
            cfg.groebner.max_pairs = n;
        }
        if cfg.jobs == 0 || cfg.groebner.max_pairs == 0 {
            return Err(CliError::Usage("--jobs and --gb-max-pairs must be positive".into()));
        }
        cfg.output = f.output.or(file.output);
        cfg.json = f.json || file.json.unwrap_or(false);
        cfg.samples = f.samples.or(file.samples).unwrap_or(cfg.samples);
        cfg.seed = f.seed.or(file.seed).unwrap_or(cfg.seed);
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn parse(args: &[&str]) -> Result<RunConfig, CliError> {
        Cli::try_parse_from(std::iter::once("cubic-lines").chain(args.iter().copied())).unwrap().into_config()
    }

    #[test]
    fn flags_after_the_command() {
        let cfg = parse(&["census", "--cubic", "x0^3", "--stratum", "0,1", "--stratum", "(1,3)", "--jobs", "2"]).unwrap();
        assert_eq!(cfg.command, CommandKind::Census);
        assert_eq!(cfg.strata, Some(vec![Stratum { i: 0, j: 1 }, Stratum { i: 1, j: 3 }]));
        assert_eq!(cfg.jobs, 2);
    }

    #[test]
    fn flags_override_the_file() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "cubic = \"x1^3\"\nfield = \"Q\"\njobs = 3\nseed = 9\nline_span = \"1,0,0,0,0;0,1,0,0,0\"").unwrap();
        let path = file.path().to_str().unwrap();
        let cfg = parse(&["classify", "--config", path, "--jobs", "1", "--line-pluecker", "1,0,0,0,0,0,0,0,0,0"]).unwrap();
        assert_eq!(cfg.cubic, "x1^3");
        assert_eq!(cfg.field, Field::Rational);
        assert_eq!(cfg.jobs, 1);
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.line, Some(LineSource::Pluecker("1,0,0,0,0,0,0,0,0,0".into())));
    }

    #[test]
    fn rejects_bad_values() {
        assert!(parse(&["census", "--cubic", "x0^3", "--stratum", "2,1"]).is_err());
        assert!(parse(&["census", "--cubic", "x0^3", "--jobs", "0"]).is_err());
        assert!(parse(&["census"]).is_err());
        assert!(parse(&["classify", "--cubic", "x0^3", "--line-span", "a", "--line-pluecker", "b"]).is_err());
    }
}
