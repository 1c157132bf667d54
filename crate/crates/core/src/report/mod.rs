//! Analysis commands behind the `symspec` binary: `analyze`, `compare`,
//! `verify` and `spectrum`. Each command produces a serialisable report and
//! renders it as text, JSON or CSV.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::random::{random_corpus, DEFAULT_MAX_LEN, DEFAULT_MIN_LEN};
use crate::representation::{build_helmert, build_tetrahedron, build_zcurve, RepresentationMatrix};
use crate::sequence::{parse_fasta, parse_plain, AlphabetPolicy, SymbolicSequence};

mod analyze;
mod compare;
pub mod format;
mod verify;

pub use analyze::{analyze, render_analysis, render_spectrum_csv, spectrum_rows, AnalysisReport, PeakSummary, RepresentationAnalysis, SpectrumRow};
pub use compare::{compare, render_comparison, ComparisonRow, ComparisonTable, RatioLine};
pub use verify::{render_verification, verify, CheckStatus, SequenceVerification, VerifyReport};

pub const DEFAULT_PERIOD: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Compare,
    Verify,
    Spectrum,
}

/// A representation requested on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationChoice {
    Base,
    ZCurve,
    Tetrahedron,
    /// Orthonormal Helmert matrix over the sequence's own alphabet order.
    Helmert,
    /// JSON matrix file.
    File(PathBuf),
}

impl FromStr for RepresentationChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base" | "voss" => Ok(Self::Base),
            "zcurve" | "z-curve" => Ok(Self::ZCurve),
            "tetrahedron" => Ok(Self::Tetrahedron),
            "helmert" => Ok(Self::Helmert),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(Self::File(PathBuf::from(path))),
                _ => Err(Error::Config(format!(
                    "unknown representation '{s}' (expected base, zcurve, tetrahedron, helmert or file:PATH)"
                ))),
            },
        }
    }
}

impl fmt::Display for RepresentationChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Base => f.write_str("base"),
            Self::ZCurve => f.write_str("zcurve"),
            Self::Tetrahedron => f.write_str("tetrahedron"),
            Self::Helmert => f.write_str("helmert"),
            Self::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// A representation ready to apply. Helmert matrices are built per alphabet.
#[derive(Clone, Debug)]
pub enum Representation {
    Base,
    Matrix(RepresentationMatrix),
    Helmert,
}

impl Representation {
    pub fn resolve(choice: &RepresentationChoice) -> Result<Self> {
        Ok(match choice {
            RepresentationChoice::Base => Self::Base,
            RepresentationChoice::ZCurve => Self::Matrix(build_zcurve()),
            RepresentationChoice::Tetrahedron => Self::Matrix(build_tetrahedron()),
            RepresentationChoice::Helmert => Self::Helmert,
            RepresentationChoice::File(path) => Self::Matrix(
                RepresentationMatrix::from_json_file(path).map_err(|e| Error::Input {
                    origin: path.display().to_string(),
                    source: Box::new(e),
                })?,
            ),
        })
    }

    /// `None` for the base-vector representation.
    pub fn matrix_for(&self, alphabet: &Alphabet) -> Option<RepresentationMatrix> {
        match self {
            Self::Base => None,
            Self::Matrix(m) => Some(m.clone()),
            Self::Helmert => Some(build_helmert(alphabet)),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            _ => Err(Error::Config(format!("unknown format '{s}' (expected text, json or csv)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    Stdin,
    Path(PathBuf),
    /// In-memory text, labelled for reports.
    Text { label: String, text: String },
    /// Seeded uniform random sequences over the canonical alphabet of
    /// `alphabet_size` symbols.
    Random {
        count: usize,
        alphabet_size: usize,
        seed: u64,
    },
}

impl InputSource {
    pub fn label(&self) -> String {
        match self {
            Self::Stdin => "-".into(),
            Self::Path(p) => p.display().to_string(),
            Self::Text { label, .. } => label.clone(),
            Self::Random {
                count,
                alphabet_size,
                seed,
            } => format!("random(n={count}, T={alphabet_size}, seed={seed})"),
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Self::Random { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub input: InputSource,
    pub alphabet: AlphabetPolicy,
    /// Treat the input as one headerless record.
    pub plain: bool,
    pub representations: Vec<RepresentationChoice>,
    pub period: usize,
    pub format: OutputFormat,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            input: InputSource::Stdin,
            alphabet: AlphabetPolicy::Explicit(Alphabet::dna()),
            plain: false,
            representations: vec![RepresentationChoice::Base],
            period: DEFAULT_PERIOD,
            format: OutputFormat::Text,
        }
    }
}

impl AnalysisConfig {
    /// `verify` accepts an empty representation list and picks defaults.
    pub fn validate(&self, command: Command) -> Result<()> {
        if self.representations.is_empty() && command != Command::Verify {
            return Err(Error::Config("at least one representation must be selected".into()));
        }
        if self.period < 2 {
            return Err(Error::InvalidPeriod(self.period));
        }
        if let InputSource::Random { count, .. } = self.input {
            if count == 0 {
                return Err(Error::Config("--random needs at least one sequence".into()));
            }
        }
        Ok(())
    }

    pub fn load_sequences(&self) -> Result<Vec<SymbolicSequence>> {
        let parse = |text: &str| {
            if self.plain {
                parse_plain(text, &self.alphabet)
            } else {
                parse_fasta(text, &self.alphabet)
            }
        };
        let wrap = |origin: String| move |e: Error| Error::Input { origin, source: Box::new(e) };
        match &self.input {
            InputSource::Stdin => {
                let text = std::io::read_to_string(std::io::stdin())?;
                parse(&text).map_err(wrap("<stdin>".into()))
            }
            InputSource::Path(path) => {
                let origin = path.display().to_string();
                let text = std::fs::read_to_string(path).map_err(|e| Error::Input {
                    origin: origin.clone(),
                    source: Box::new(e.into()),
                })?;
                parse(&text).map_err(wrap(origin))
            }
            InputSource::Text { label, text } => parse(text).map_err(wrap(label.clone())),
            InputSource::Random {
                count,
                alphabet_size,
                seed,
            } => {
                let alphabet = Alphabet::canonical(*alphabet_size)?;
                Ok(random_corpus(*seed, *count, &alphabet, DEFAULT_MIN_LEN, DEFAULT_MAX_LEN))
            }
        }
    }
}

/// Rendered command output and whether every check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub success: bool,
}

/// Load the input, run `command` and render the result.
pub fn run(command: Command, config: &AnalysisConfig) -> Result<CommandOutput> {
    config.validate(command)?;
    let sequences = config.load_sequences()?;
    let label = config.input.label();
    match command {
        Command::Analyze => {
            let reports = analyze(&label, &sequences, &config.representations, config.period)?;
            let success = reports.iter().all(AnalysisReport::all_checks_pass);
            Ok(CommandOutput {
                text: render_analysis(&reports, config.format),
                success,
            })
        }
        Command::Compare => {
            let tables = compare(&label, &sequences, &config.representations, config.period)?;
            let success = tables.iter().all(ComparisonTable::all_checks_pass);
            Ok(CommandOutput {
                text: render_comparison(&tables, config.format),
                success,
            })
        }
        Command::Verify => {
            let report = verify(&label, config.input.seed(), &sequences, &config.representations)?;
            Ok(CommandOutput {
                success: report.all_pass,
                text: render_verification(&report, config.format),
            })
        }
        Command::Spectrum => {
            if config.representations.len() != 1 {
                return Err(Error::Config("spectrum needs exactly one representation".into()));
            }
            if sequences.len() != 1 {
                return Err(Error::Config(format!(
                    "spectrum needs a single sequence, input has {}",
                    sequences.len()
                )));
            }
            let rows = spectrum_rows(&sequences[0], &config.representations[0])?;
            Ok(CommandOutput {
                text: render_spectrum_csv(&rows),
                success: true,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TotalCheck {
    pub expected: f64,
    pub measured: f64,
    pub pass: bool,
}
