use std::fmt::Write as _;

use serde::Serialize;

use super::format::{csv_number, quantity, snr};
use super::{OutputFormat, Representation, RepresentationChoice, TotalCheck};
use crate::error::{Error, Result};
use crate::indicator::{build_indicators, IndicatorMatrix};
use crate::representation::RepresentationMatrix;
use crate::sequence::SymbolicSequence;
use crate::spectrum::{
    periodicity_query, spectrum_base, spectrum_transformed, RatioCheck, SpectrumReport,
    TotalSpectrumCheck, BASE_NAME,
};
use crate::transform::apply_representation;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeakSummary {
    pub k: usize,
    pub power: f64,
    pub snr: f64,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioSummary {
    pub expected: f64,
    pub max_dev: Option<f64>,
    pub evaluated: usize,
    pub skipped: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremChecks {
    pub total_spectrum: TotalCheck,
    /// Absent for the base representation.
    pub snr_ratio: Option<RatioSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepresentationAnalysis {
    pub name: String,
    /// Common row norm; 1 for the base vectors.
    pub d: f64,
    pub total: f64,
    pub mean_noise: f64,
    /// `None` when the period exceeds the sequence length.
    pub peak: Option<PeakSummary>,
    pub theorem_checks: TheoremChecks,
    #[serde(skip)]
    pub spectrum: SpectrumReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub id: Option<String>,
    pub m: usize,
    pub alphabet: String,
    pub period: usize,
    pub representations: Vec<RepresentationAnalysis>,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.representations.iter().all(|r| {
            r.theorem_checks.total_spectrum.pass
                && r.theorem_checks.snr_ratio.as_ref().is_none_or(|s| s.pass)
        })
    }
}

pub(super) fn analyse_one(
    ind: &IndicatorMatrix,
    base: &SpectrumReport,
    matrix: Option<&RepresentationMatrix>,
    period: usize,
) -> Result<RepresentationAnalysis> {
    let m = ind.len() as f64;
    let (spectrum, d, total_check, snr_ratio) = match matrix {
        None => {
            let check = TotalSpectrumCheck::new(m * m, base.total());
            (base.clone(), 1.0, check, None)
        }
        Some(rep) => {
            let sig = apply_representation(ind, rep)?;
            let spectrum = spectrum_transformed(&sig);
            let expected = crate::spectrum::expected_transformed_total(sig.len(), sig.symbol_count(), sig.row_norm());
            let check = TotalSpectrumCheck::new(expected, spectrum.total());
            let t = rep.symbol_count() as f64;
            let ratio = RatioCheck::from_reports(base, &spectrum, t / (t - 1.0));
            let summary = RatioSummary {
                expected: ratio.expected,
                max_dev: ratio.max_deviation,
                evaluated: ratio.evaluated,
                skipped: ratio.skipped,
                pass: ratio.passes(),
            };
            (spectrum, rep.row_norm(), check, Some(summary))
        }
    };
    let peak = match periodicity_query(&spectrum, period) {
        Ok(p) => Some(PeakSummary {
            k: p.k,
            power: p.power,
            snr: p.snr,
            exact: p.exact,
        }),
        Err(Error::PeriodExceedsLength { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(RepresentationAnalysis {
        name: spectrum.name().to_string(),
        d,
        total: spectrum.total(),
        mean_noise: spectrum.average(),
        peak,
        theorem_checks: TheoremChecks {
            total_spectrum: TotalCheck {
                expected: total_check.expected,
                measured: total_check.measured,
                pass: total_check.passes(),
            },
            snr_ratio,
        },
        spectrum,
    })
}

/// Spectra, peak and theorem checks of every record under every representation.
pub fn analyze(
    input: &str,
    sequences: &[SymbolicSequence],
    choices: &[RepresentationChoice],
    period: usize,
) -> Result<Vec<AnalysisReport>> {
    let reps = choices.iter().map(Representation::resolve).collect::<Result<Vec<_>>>()?;
    sequences
        .iter()
        .map(|seq| {
            let ind = build_indicators(seq);
            let base = spectrum_base(&ind);
            let representations = reps
                .iter()
                .map(|rep| analyse_one(&ind, &base, rep.matrix_for(seq.alphabet()).as_ref(), period))
                .collect::<Result<Vec<_>>>()?;
            Ok(AnalysisReport {
                input: input.to_string(),
                id: seq.id().map(str::to_string),
                m: seq.len(),
                alphabet: seq.alphabet().to_string(),
                period,
                representations,
            })
        })
        .collect()
}

fn pass_fail(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn render_text(reports: &[AnalysisReport]) -> String {
    let mut out = String::new();
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "input: {}", r.input);
        if let Some(id) = &r.id {
            let _ = writeln!(out, "record: {id}");
        }
        let _ = writeln!(out, "m = {}, T = {}, alphabet = {}", r.m, r.alphabet.chars().count(), r.alphabet);
        for a in &r.representations {
            let _ = writeln!(out, "\n[{}] d = {}", a.name, quantity(a.d));
            let _ = writeln!(out, "  total spectrum    {}", quantity(a.total));
            let _ = writeln!(out, "  mean noise        {}", quantity(a.mean_noise));
            match &a.peak {
                Some(p) => {
                    let k_note = if p.exact {
                        String::new()
                    } else {
                        format!(" (rounded from m/{} = {:.4})", r.period, r.m as f64 / r.period as f64)
                    };
                    let _ = writeln!(out, "  period {} -> k = {}{k_note}", r.period, p.k);
                    let _ = writeln!(out, "  {}-periodicity     {}", r.period, quantity(p.power));
                    let _ = writeln!(out, "  SNR               {}", snr(p.snr));
                }
                None => {
                    let _ = writeln!(out, "  period {} exceeds length {}; no peak", r.period, r.m);
                }
            }
            let tc = &a.theorem_checks.total_spectrum;
            let rule = if a.name == BASE_NAME { "m^2" } else { "d^2 m^2 (T-1)/T" };
            let _ = writeln!(
                out,
                "  check total spectrum = {rule}: expected {}, measured {} .. {}",
                quantity(tc.expected),
                quantity(tc.measured),
                pass_fail(tc.pass)
            );
            if let Some(s) = &a.theorem_checks.snr_ratio {
                match s.max_dev {
                    Some(dev) => {
                        let _ = writeln!(
                            out,
                            "  check SNR ratio = T/(T-1) = {:.6}: max deviation {dev:.3e} over {} bins ({} skipped) .. {}",
                            s.expected,
                            s.evaluated,
                            s.skipped,
                            pass_fail(s.pass)
                        );
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "  check SNR ratio = T/(T-1) = {:.6}: vacuous (no nonzero base bins)",
                            s.expected
                        );
                    }
                }
            }
        }
    }
    out
}

fn render_csv(reports: &[AnalysisReport]) -> String {
    let mut out = String::from("record,representation,k,frequency,power,snr\n");
    for r in reports {
        let record = r.id.as_deref().unwrap_or("");
        for a in &r.representations {
            let s = &a.spectrum;
            for k in 1..s.len() {
                let _ = writeln!(
                    out,
                    "{record},{},{k},{},{},{}",
                    a.name,
                    csv_number(k as f64 / s.len() as f64),
                    csv_number(s.power()[k]),
                    csv_number(s.snr()[k - 1])
                );
            }
        }
    }
    out
}

pub fn render_analysis(reports: &[AnalysisReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(reports),
        OutputFormat::Csv => render_csv(reports),
        OutputFormat::Json => {
            let mut s = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(reports)
            }
            .expect("report serialises");
            s.push('\n');
            s
        }
    }
}

/// One row of the `k,frequency,power,snr` spectrum table.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumRow {
    pub k: usize,
    pub frequency: f64,
    pub power: f64,
    pub snr: f64,
}

/// Rows for `k = 1..m` of one sequence under one representation.
pub fn spectrum_rows(seq: &SymbolicSequence, choice: &RepresentationChoice) -> Result<Vec<SpectrumRow>> {
    let rep = Representation::resolve(choice)?;
    let ind = build_indicators(seq);
    let report = match rep.matrix_for(seq.alphabet()) {
        None => spectrum_base(&ind),
        Some(matrix) => spectrum_transformed(&apply_representation(&ind, &matrix)?),
    };
    let m = report.len();
    Ok((1..m)
        .map(|k| SpectrumRow {
            k,
            frequency: k as f64 / m as f64,
            power: report.power()[k],
            snr: report.snr()[k - 1],
        })
        .collect())
}

pub fn render_spectrum_csv(rows: &[SpectrumRow]) -> String {
    let mut out = String::from("k,frequency,power,snr\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.k,
            csv_number(r.frequency),
            csv_number(r.power),
            csv_number(r.snr)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::sequence::sequence_from_string;

    fn acgt() -> Vec<SymbolicSequence> {
        vec![sequence_from_string("ACGT", &Alphabet::dna()).unwrap()]
    }

    #[test]
    fn acgt_base_and_zcurve() {
        let reports = analyze(
            "t",
            &acgt(),
            &[RepresentationChoice::Base, RepresentationChoice::ZCurve],
            3,
        )
        .unwrap();
        let r = &reports[0];
        assert!(r.all_checks_pass());
        let base = &r.representations[0];
        let z = &r.representations[1];
        let peak = base.peak.as_ref().unwrap();
        assert_eq!((peak.k, peak.exact), (1, false));
        assert!(base.spectrum.snr().iter().all(|s| (s - 1.0).abs() < 1e-12));
        assert!(z.spectrum.snr().iter().all(|s| (s - 4.0 / 3.0).abs() < 1e-12));
        assert_eq!(z.d, 2.0);
        assert!(base.theorem_checks.snr_ratio.is_none());
    }

    #[test]
    fn text_mentions_rounding() {
        let reports = analyze("t", &acgt(), &[RepresentationChoice::Base], 3).unwrap();
        let text = render_analysis(&reports, OutputFormat::Text);
        assert!(text.contains("k = 1 (rounded from m/3 = 1.3333)"), "{text}");
        assert!(text.contains("SNR               1.0000"), "{text}");
    }

    #[test]
    fn period_longer_than_sequence() {
        let seqs = vec![sequence_from_string("G", &Alphabet::dna()).unwrap()];
        let reports = analyze("t", &seqs, &[RepresentationChoice::Base, RepresentationChoice::ZCurve], 3).unwrap();
        assert!(reports[0].representations.iter().all(|r| r.peak.is_none()));
        assert!(reports[0].all_checks_pass());
    }

    #[test]
    fn spectrum_csv_for_acgt() {
        let rows = spectrum_rows(&acgt()[0], &RepresentationChoice::Base).unwrap();
        let csv = render_spectrum_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "k,frequency,power,snr");
        assert_eq!(lines.len(), 4);
        for r in &rows {
            assert!((r.power - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn json_schema_fields() {
        let reports = analyze("t", &acgt(), &[RepresentationChoice::ZCurve], 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&render_analysis(&reports, OutputFormat::Json)).unwrap();
        for key in ["input", "m", "alphabet", "representations"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let rep = &v["representations"][0];
        for key in ["name", "d", "total", "mean_noise", "peak", "theorem_checks"] {
            assert!(rep.get(key).is_some(), "missing {key}");
        }
        assert!(rep["peak"]["k"].is_u64());
        assert!(rep["theorem_checks"]["total_spectrum"]["pass"].as_bool().unwrap());
        assert!(rep["theorem_checks"]["snr_ratio"]["max_dev"].is_number());
    }
}
