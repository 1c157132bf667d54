use std::fmt::Write as _;

use serde::Serialize;

use super::analyze::analyse_one;
use super::format::{csv_number, quantity, snr};
use super::{OutputFormat, Representation, RepresentationChoice};
use crate::error::{Error, Result};
use crate::indicator::build_indicators;
use crate::sequence::SymbolicSequence;
use crate::spectrum::{spectrum_base, BASE_SNR_FLOOR};

/// One method column of the comparison table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub method: String,
    pub length: usize,
    pub total_spectra: f64,
    pub mean_noise: f64,
    /// Bin of the period of interest; `None` when the period exceeds `m`.
    pub k: Option<usize>,
    pub periodicity: f64,
    pub snr: f64,
    /// Factor by which this method scales the base SNR: 1 for base vectors,
    /// `T/(T-1)` for row-orthogonal transforms.
    #[serde(skip)]
    snr_factor: f64,
    #[serde(skip)]
    total_matches_theory: bool,
}

/// SNR of `method` over SNR of `reference` at the period bin.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioLine {
    pub method: String,
    pub reference: String,
    /// `None` when the reference SNR is zero at that bin.
    pub measured: Option<f64>,
    pub theoretical: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub input: String,
    pub id: Option<String>,
    pub period: usize,
    pub exact_period: bool,
    pub rows: Vec<ComparisonRow>,
    pub ratios: Vec<RatioLine>,
    /// Totals are measured `sum_k P(k)` and agree with the closed forms.
    pub totals_match_theory: bool,
}

impl ComparisonTable {
    pub fn all_checks_pass(&self) -> bool {
        self.totals_match_theory
    }
}

pub fn compare(
    input: &str,
    sequences: &[SymbolicSequence],
    choices: &[RepresentationChoice],
    period: usize,
) -> Result<Vec<ComparisonTable>> {
    if choices.len() < 2 {
        return Err(Error::Config("compare needs at least two representations".into()));
    }
    let reps = choices.iter().map(Representation::resolve).collect::<Result<Vec<_>>>()?;
    sequences
        .iter()
        .map(|seq| {
            let ind = build_indicators(seq);
            let base = spectrum_base(&ind);
            let mut rows = Vec::with_capacity(reps.len());
            let mut exact_period = true;
            for rep in &reps {
                let matrix = rep.matrix_for(seq.alphabet());
                let factor = matrix.as_ref().map_or(1.0, |m| {
                    let t = m.symbol_count() as f64;
                    t / (t - 1.0)
                });
                let a = analyse_one(&ind, &base, matrix.as_ref(), period)?;
                if let Some(p) = &a.peak {
                    exact_period = p.exact;
                }
                rows.push(ComparisonRow {
                    method: a.name.clone(),
                    length: seq.len(),
                    total_spectra: a.total,
                    mean_noise: a.mean_noise,
                    k: a.peak.as_ref().map(|p| p.k),
                    periodicity: a.peak.as_ref().map_or(0.0, |p| p.power),
                    snr: a.peak.as_ref().map_or(0.0, |p| p.snr),
                    snr_factor: factor,
                    total_matches_theory: a.theorem_checks.total_spectrum.pass,
                });
            }
            let reference = &rows[0];
            let ratios = rows[1..]
                .iter()
                .map(|row| RatioLine {
                    method: row.method.clone(),
                    reference: reference.method.clone(),
                    measured: (reference.k.is_some() && reference.snr > BASE_SNR_FLOOR)
                        .then(|| row.snr / reference.snr),
                    theoretical: row.snr_factor / reference.snr_factor,
                })
                .collect();
            let totals_match_theory = rows.iter().all(|r| r.total_matches_theory);
            Ok(ComparisonTable {
                input: input.to_string(),
                id: seq.id().map(str::to_string),
                period,
                exact_period,
                rows,
                ratios,
                totals_match_theory,
            })
        })
        .collect()
}

fn render_text(tables: &[ComparisonTable]) -> String {
    let mut out = String::new();
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if let Some(id) = &t.id {
            let _ = writeln!(out, "record: {id}");
        }
        let periodicity_label = format!("{}-Periodicity", t.period);
        let cell = |row: &ComparisonRow, f: &dyn Fn(&ComparisonRow) -> String| {
            if row.k.is_some() {
                f(row)
            } else {
                "-".to_string()
            }
        };
        let lines: Vec<(String, Vec<String>)> = vec![
            ("Method".into(), t.rows.iter().map(|r| r.method.clone()).collect()),
            ("Length".into(), t.rows.iter().map(|r| r.length.to_string()).collect()),
            ("Total Spectra*".into(), t.rows.iter().map(|r| quantity(r.total_spectra)).collect()),
            ("Mean Noise".into(), t.rows.iter().map(|r| quantity(r.mean_noise)).collect()),
            (
                periodicity_label,
                t.rows.iter().map(|r| cell(r, &|r| quantity(r.periodicity))).collect(),
            ),
            ("SNR".into(), t.rows.iter().map(|r| cell(r, &|r| snr(r.snr))).collect()),
        ];
        let label_width = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0) + 2;
        let col_width = lines
            .iter()
            .flat_map(|(_, cells)| cells.iter().map(String::len))
            .max()
            .unwrap_or(0)
            + 2;
        for (label, cells) in &lines {
            let _ = write!(out, "{label:<label_width$}");
            for c in cells {
                let _ = write!(out, "{c:<col_width$}");
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out.push('\n');
        match t.rows[0].k {
            Some(k) => {
                let note = if t.exact_period { "" } else { ", rounded" };
                let _ = writeln!(out, "Period {} at k = {k}{note}", t.period);
            }
            None => {
                let _ = writeln!(out, "Period {} exceeds sequence length {}", t.period, t.rows[0].length);
            }
        }
        for r in &t.ratios {
            let measured = r.measured.map_or("indeterminate".to_string(), snr);
            let _ = writeln!(
                out,
                "SNR ratio {}/{}: measured {measured}, theoretical {}",
                r.method,
                r.reference,
                snr(r.theoretical)
            );
        }
        let verdict = if t.totals_match_theory {
            "agree with"
        } else {
            "DO NOT agree with"
        };
        let _ = writeln!(
            out,
            "* Total Spectra are measured sums of P(k) over all k; they {verdict} m^2 (base vectors) and d^2 m^2 (T-1)/T (row-orthogonal transforms) to 1e-9."
        );
    }
    out
}

fn render_csv(tables: &[ComparisonTable]) -> String {
    let mut out = String::from(
        "record,method,length,total_spectra,mean_noise,k,periodicity,snr,snr_ratio,theoretical_ratio\n",
    );
    for t in tables {
        let record = t.id.as_deref().unwrap_or("");
        for (i, r) in t.rows.iter().enumerate() {
            let (measured, theoretical) = match i.checked_sub(1).map(|j| &t.ratios[j]) {
                Some(line) => (
                    line.measured.map_or("indeterminate".into(), csv_number),
                    csv_number(line.theoretical),
                ),
                None => ("1".into(), "1".into()),
            };
            let _ = writeln!(
                out,
                "{record},{},{},{},{},{},{},{},{measured},{theoretical}",
                r.method,
                r.length,
                csv_number(r.total_spectra),
                csv_number(r.mean_noise),
                r.k.map_or(String::new(), |k| k.to_string()),
                csv_number(r.periodicity),
                csv_number(r.snr),
            );
        }
    }
    out
}

pub fn render_comparison(tables: &[ComparisonTable], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(tables),
        OutputFormat::Csv => render_csv(tables),
        OutputFormat::Json => {
            let mut s = if tables.len() == 1 {
                serde_json::to_string_pretty(&tables[0])
            } else {
                serde_json::to_string_pretty(tables)
            }
            .expect("table serialises");
            s.push('\n');
            s
        }
    }
}
