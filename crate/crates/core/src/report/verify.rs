use std::fmt::Write as _;

use serde::Serialize;

use super::format::csv_number;
use super::{OutputFormat, Representation, RepresentationChoice};
use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::indicator::build_indicators;
use crate::representation::{build_helmert, build_tetrahedron, build_zcurve, RepresentationMatrix};
use crate::sequence::SymbolicSequence;
use crate::spectrum::{
    expected_transformed_total, spectrum_base, spectrum_transformed, RatioCheck, TotalSpectrumCheck,
};
use crate::transform::apply_representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// No frequency bin had a nonzero base SNR.
    Vacuous,
}

impl CheckStatus {
    fn ok(self) -> bool {
        self != Self::Fail
    }

    fn label(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "FAIL",
            Self::Vacuous => "vacuous (no nonzero base bins)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TotalVerification {
    pub expected: f64,
    pub measured: f64,
    pub relative_error: f64,
    pub status: CheckStatus,
}

impl From<TotalSpectrumCheck> for TotalVerification {
    fn from(c: TotalSpectrumCheck) -> Self {
        let status = if c.passes() { CheckStatus::Pass } else { CheckStatus::Fail };
        Self {
            expected: c.expected,
            measured: c.measured,
            relative_error: c.relative_error,
            status,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioVerification {
    pub representation: String,
    pub d: f64,
    /// `d^2 m^2 (T-1)/T` against the measured transformed total.
    pub total_spectrum: TotalVerification,
    pub expected_ratio: f64,
    pub max_relative_dev: Option<f64>,
    pub evaluated: usize,
    pub skipped: usize,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceVerification {
    pub id: Option<String>,
    pub m: usize,
    #[serde(rename = "T")]
    pub symbol_count: usize,
    /// Base total spectrum against `m^2`.
    pub total_spectrum: TotalVerification,
    pub snr_ratio: Vec<RatioVerification>,
}

impl SequenceVerification {
    pub fn passes(&self) -> bool {
        self.total_spectrum.status.ok()
            && self
                .snr_ratio
                .iter()
                .all(|r| r.status.ok() && r.total_spectrum.status.ok())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub input: String,
    pub seed: Option<u64>,
    pub sequences: Vec<SequenceVerification>,
    pub all_pass: bool,
}

/// Representations checked when none are requested: the Z-curve and
/// tetrahedron for DNA, plus a Helmert matrix for every alphabet.
fn default_matrices(alphabet: &Alphabet) -> Vec<RepresentationMatrix> {
    let mut out = Vec::new();
    if alphabet.same_symbols(&['A', 'C', 'G', 'T']) {
        out.push(build_zcurve());
        out.push(build_tetrahedron());
    }
    out.push(build_helmert(alphabet));
    out
}

pub fn verify_sequence(seq: &SymbolicSequence, matrices: &[RepresentationMatrix]) -> Result<SequenceVerification> {
    let ind = build_indicators(seq);
    let base = spectrum_base(&ind);
    let m = seq.len() as f64;
    let total_spectrum = TotalSpectrumCheck::new(m * m, base.total()).into();
    let snr_ratio = matrices
        .iter()
        .map(|rep| {
            let sig = apply_representation(&ind, rep)?;
            let spectrum = spectrum_transformed(&sig);
            let total = TotalSpectrumCheck::new(
                expected_transformed_total(sig.len(), sig.symbol_count(), sig.row_norm()),
                spectrum.total(),
            );
            let t = rep.symbol_count() as f64;
            let ratio = RatioCheck::from_reports(&base, &spectrum, t / (t - 1.0));
            let status = if ratio.is_vacuous() {
                CheckStatus::Vacuous
            } else if ratio.passes() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            Ok(RatioVerification {
                representation: rep.name().to_string(),
                d: rep.row_norm(),
                total_spectrum: total.into(),
                expected_ratio: ratio.expected,
                max_relative_dev: ratio.max_relative_deviation(),
                evaluated: ratio.evaluated,
                skipped: ratio.skipped,
                status,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceVerification {
        id: seq.id().map(str::to_string),
        m: seq.len(),
        symbol_count: seq.alphabet().len(),
        total_spectrum,
        snr_ratio,
    })
}

/// Check both identities on every sequence. `choices` selects the transforms
/// (`base` entries are ignored); when empty, [`default_matrices`] is used.
pub fn verify(
    input: &str,
    seed: Option<u64>,
    sequences: &[SymbolicSequence],
    choices: &[RepresentationChoice],
) -> Result<VerifyReport> {
    let reps = choices
        .iter()
        .filter(|c| **c != RepresentationChoice::Base)
        .map(Representation::resolve)
        .collect::<Result<Vec<_>>>()?;
    let sequences = sequences
        .iter()
        .map(|seq| {
            let matrices: Vec<RepresentationMatrix> = if reps.is_empty() {
                default_matrices(seq.alphabet())
            } else {
                reps.iter().filter_map(|r| r.matrix_for(seq.alphabet())).collect()
            };
            verify_sequence(seq, &matrices)
        })
        .collect::<Result<Vec<_>>>()?;
    let all_pass = sequences.iter().all(SequenceVerification::passes);
    Ok(VerifyReport {
        input: input.to_string(),
        seed,
        sequences,
        all_pass,
    })
}

fn render_text(report: &VerifyReport) -> String {
    let mut out = format!("input: {}\n", report.input);
    if let Some(seed) = report.seed {
        let _ = writeln!(out, "seed: {seed}");
    }
    for s in &report.sequences {
        let name = s.id.as_deref().unwrap_or("<unnamed>");
        let _ = writeln!(
            out,
            "{name} (m = {}, T = {}): total spectrum = m^2 .. {} (rel. error {:.2e})",
            s.m,
            s.symbol_count,
            s.total_spectrum.status.label(),
            s.total_spectrum.relative_error
        );
        for r in &s.snr_ratio {
            let dev = r.max_relative_dev.map_or(String::new(), |d| format!(" (max rel. dev {d:.2e})"));
            let _ = writeln!(
                out,
                "  {}: SNR ratio = {:.6} .. {}{dev}; total = d^2 m^2 (T-1)/T .. {}",
                r.representation,
                r.expected_ratio,
                r.status.label(),
                r.total_spectrum.status.label()
            );
        }
    }
    let passed = report.sequences.iter().filter(|s| s.passes()).count();
    let _ = writeln!(
        out,
        "{passed}/{} sequences pass: {}",
        report.sequences.len(),
        if report.all_pass { "OK" } else { "FAILED" }
    );
    out
}

fn render_csv(report: &VerifyReport) -> String {
    let mut out = String::from("record,m,T,check,representation,expected,deviation,status\n");
    for s in &report.sequences {
        let record = s.id.as_deref().unwrap_or("");
        let _ = writeln!(
            out,
            "{record},{},{},total_spectrum,base,{},{},{}",
            s.m,
            s.symbol_count,
            csv_number(s.total_spectrum.expected),
            csv_number(s.total_spectrum.relative_error),
            s.total_spectrum.status.label()
        );
        for r in &s.snr_ratio {
            let _ = writeln!(
                out,
                "{record},{},{},total_spectrum,{},{},{},{}",
                s.m,
                s.symbol_count,
                r.representation,
                csv_number(r.total_spectrum.expected),
                csv_number(r.total_spectrum.relative_error),
                r.total_spectrum.status.label()
            );
            let _ = writeln!(
                out,
                "{record},{},{},snr_ratio,{},{},{},{}",
                s.m,
                s.symbol_count,
                r.representation,
                csv_number(r.expected_ratio),
                r.max_relative_dev.map_or(String::new(), csv_number),
                r.status.label()
            );
        }
    }
    out
}

pub fn render_verification(report: &VerifyReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(report),
        OutputFormat::Csv => render_csv(report),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serialises");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_corpus;
    use crate::sequence::sequence_from_string;

    #[test]
    fn random_dna_passes_with_defaults() {
        let seqs = random_corpus(5, 10, &Alphabet::dna(), 1, 300);
        let r = verify("t", Some(5), &seqs, &[]).unwrap();
        assert!(r.all_pass);
        assert!(r.sequences.iter().all(|s| s.snr_ratio.len() == 3));
    }

    #[test]
    fn protein_ratio_is_twenty_nineteenths() {
        let seqs = random_corpus(9, 5, &Alphabet::protein(), 50, 400);
        let r = verify("t", Some(9), &seqs, &[]).unwrap();
        assert!(r.all_pass);
        for s in &r.sequences {
            assert_eq!(s.snr_ratio.len(), 1);
            assert!((s.snr_ratio[0].expected_ratio - 20.0 / 19.0).abs() < 1e-15);
        }
    }

    #[test]
    fn single_symbol_is_vacuous() {
        let seqs = vec![sequence_from_string("CCCCCCC", &Alphabet::dna()).unwrap()];
        let r = verify("t", None, &seqs, &[]).unwrap();
        assert!(r.all_pass);
        let s = &r.sequences[0];
        assert_eq!(s.total_spectrum.status, CheckStatus::Pass);
        assert!(s.snr_ratio.iter().all(|x| x.status == CheckStatus::Vacuous));
        let text = render_verification(&r, OutputFormat::Text);
        assert!(text.contains("vacuous (no nonzero base bins)"));
    }

    #[test]
    fn explicit_choices_skip_base() {
        let seqs = random_corpus(1, 2, &Alphabet::dna(), 10, 20);
        let r = verify(
            "t",
            None,
            &seqs,
            &[RepresentationChoice::Base, RepresentationChoice::ZCurve],
        )
        .unwrap();
        assert!(r.sequences.iter().all(|s| s.snr_ratio.len() == 1));
    }
}
