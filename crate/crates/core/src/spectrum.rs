//! Power spectra and signal-to-noise ratios.
//!
//! For a set of channel spectra `X_c(k)` the power is
//! `P(k) = sum_c |X_c(k)|^2`, the total is `P = sum_k P(k)` (including
//! `k = 0`), the mean noise is `E = P / m` and `SNR(k) = P(k) / E` for
//! `k = 1..m`.

use serde::Serialize;

use crate::dft::{dft_fast_real, ChannelSpectrum};
use crate::error::{Error, Result};
use crate::indicator::IndicatorMatrix;
use crate::representation::RepresentationMatrix;
use crate::transform::{apply_representation, TransformedSignal};

/// Relative tolerance used by every theorem check.
pub const THEOREM_TOL: f64 = 1e-9;

/// Bins whose base SNR is at or below this are left out of ratio checks.
pub const BASE_SNR_FLOOR: f64 = 1e-12;

/// Name used for the T-base-vector (indicator) representation.
pub const BASE_NAME: &str = "base";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    name: String,
    len: usize,
    power: Vec<f64>,
    total: f64,
    average: f64,
    snr: Vec<f64>,
}

impl SpectrumReport {
    pub fn from_channels(name: impl Into<String>, channels: &[ChannelSpectrum]) -> Self {
        let m = channels.first().map_or(0, ChannelSpectrum::len);
        let mut power = vec![0.0; m];
        for ch in channels {
            assert_eq!(ch.len(), m, "channel spectra differ in length");
            for (p, v) in power.iter_mut().zip(ch.values()) {
                *p += v.norm_sqr();
            }
        }
        let total: f64 = power.iter().sum();
        let average = total / m as f64;
        let snr = power.iter().skip(1).map(|p| p / average).collect();
        Self {
            name: name.into(),
            len: m,
            power,
            total,
            average,
            snr,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Sequence length `m`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `P(k)` for `k = 0..m`.
    pub fn power(&self) -> &[f64] {
        &self.power
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    /// Mean noise `E = P / m`.
    pub fn average(&self) -> f64 {
        self.average
    }

    /// `SNR(k)` for `k = 1..m`; index 0 holds `SNR(1)`.
    pub fn snr(&self) -> &[f64] {
        &self.snr
    }

    /// `SNR(k)` for `1 <= k < m`.
    pub fn snr_at(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.snr.get(i).copied())
    }
}

/// DFT of every indicator row.
pub fn indicator_spectra(ind: &IndicatorMatrix) -> Vec<ChannelSpectrum> {
    (0..ind.alphabet_size())
        .map(|t| dft_fast_real(&ind.row_f64(t)))
        .collect()
}

pub fn transformed_spectra(sig: &TransformedSignal) -> Vec<ChannelSpectrum> {
    sig.channels().iter().map(|c| dft_fast_real(c)).collect()
}

/// Spectrum of the T-base-vector representation.
pub fn spectrum_base(ind: &IndicatorMatrix) -> SpectrumReport {
    SpectrumReport::from_channels(BASE_NAME, &indicator_spectra(ind))
}

pub fn spectrum_transformed(sig: &TransformedSignal) -> SpectrumReport {
    SpectrumReport::from_channels(sig.name(), &transformed_spectra(sig))
}

/// Expected total spectrum of a `(T-1)`-channel representation with row
/// norm `d`: `d^2 m^2 (T-1)/T`.
pub fn expected_transformed_total(m: usize, symbol_count: usize, row_norm: f64) -> f64 {
    let t = symbol_count as f64;
    row_norm * row_norm * (m as f64).powi(2) * (t - 1.0) / t
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TotalSpectrumCheck {
    pub expected: f64,
    pub measured: f64,
    pub relative_error: f64,
}

impl TotalSpectrumCheck {
    pub fn new(expected: f64, measured: f64) -> Self {
        Self {
            expected,
            measured,
            relative_error: (measured - expected).abs() / expected.abs(),
        }
    }

    pub fn passes(&self) -> bool {
        self.relative_error < THEOREM_TOL
    }
}

/// Total base spectrum against `m^2`.
pub fn verify_total_spectrum(ind: &IndicatorMatrix) -> TotalSpectrumCheck {
    let m = ind.len() as f64;
    TotalSpectrumCheck::new(m * m, spectrum_base(ind).total())
}

/// Total transformed spectrum against `d^2 m^2 (T-1)/T`.
pub fn verify_transformed_total(sig: &TransformedSignal) -> TotalSpectrumCheck {
    let expected = expected_transformed_total(sig.len(), sig.symbol_count(), sig.row_norm());
    TotalSpectrumCheck::new(expected, spectrum_transformed(sig).total())
}

/// Per-bin ratio of transformed to base SNR.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioCheck {
    /// `T / (T - 1)`.
    pub expected: f64,
    /// `ratios[k - 1]`; `None` where the base SNR is at or below the floor.
    pub ratios: Vec<Option<f64>>,
    /// Largest `|ratio - expected|` over evaluated bins.
    pub max_deviation: Option<f64>,
    pub evaluated: usize,
    pub skipped: usize,
}

impl RatioCheck {
    pub fn from_reports(base: &SpectrumReport, transformed: &SpectrumReport, expected: f64) -> Self {
        let ratios: Vec<Option<f64>> = base
            .snr()
            .iter()
            .zip(transformed.snr())
            .map(|(&b, &t)| (b > BASE_SNR_FLOOR).then(|| t / b))
            .collect();
        let evaluated = ratios.iter().flatten().count();
        let max_deviation = ratios
            .iter()
            .flatten()
            .map(|r| (r - expected).abs())
            .reduce(f64::max);
        Self {
            expected,
            skipped: ratios.len() - evaluated,
            ratios,
            max_deviation,
            evaluated,
        }
    }

    /// No bin had a usable base SNR; the identity holds vacuously.
    pub fn is_vacuous(&self) -> bool {
        self.evaluated == 0
    }

    pub fn max_relative_deviation(&self) -> Option<f64> {
        self.max_deviation.map(|d| d / self.expected)
    }

    pub fn passes(&self) -> bool {
        self.max_relative_deviation().is_none_or(|d| d < THEOREM_TOL)
    }
}

/// Transformed SNR over base SNR, bin by bin, against `T / (T - 1)`.
pub fn snr_ratio_check(ind: &IndicatorMatrix, rep: &RepresentationMatrix) -> Result<RatioCheck> {
    let sig = apply_representation(ind, rep)?;
    let base = spectrum_base(ind);
    let transformed = spectrum_transformed(&sig);
    let t = rep.symbol_count() as f64;
    Ok(RatioCheck::from_reports(&base, &transformed, t / (t - 1.0)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodicityPeak {
    pub period: usize,
    pub k: usize,
    /// False when `period` does not divide `m` and `k` was rounded.
    pub exact: bool,
    pub power: f64,
    pub snr: f64,
}

/// Power and SNR at the bin `k = m / period` (rounded to nearest when the
/// period does not divide `m`).
pub fn periodicity_query(report: &SpectrumReport, period: usize) -> Result<PeriodicityPeak> {
    let m = report.len();
    if period < 2 {
        return Err(Error::InvalidPeriod(period));
    }
    if period > m {
        return Err(Error::PeriodExceedsLength { period, length: m });
    }
    let exact = m % period == 0;
    let k = if exact {
        m / period
    } else {
        (m as f64 / period as f64).round() as usize
    };
    Ok(PeriodicityPeak {
        period,
        k,
        exact,
        power: report.power()[k],
        snr: report.snr_at(k).expect("1 <= k < m when 2 <= period <= m"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::indicator::build_indicators;
    use crate::representation::{build_helmert, build_zcurve};
    use crate::sequence::sequence_from_string;

    fn ind(text: &str) -> IndicatorMatrix {
        build_indicators(&sequence_from_string(text, &Alphabet::dna()).unwrap())
    }

    fn approx(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn base_acgt() {
        let r = spectrum_base(&ind("ACGT"));
        assert!(r.power().iter().all(|&p| approx(p, 4.0)));
        assert!(approx(r.total(), 16.0));
        assert!(approx(r.average(), 4.0));
        assert_eq!(r.snr().len(), 3);
        assert!(r.snr().iter().all(|&s| approx(s, 1.0)));
    }

    #[test]
    fn base_single_symbol() {
        let r = spectrum_base(&ind("AAAA"));
        assert!(approx(r.power()[0], 16.0));
        assert!(r.power()[1..].iter().all(|&p| p.abs() < 1e-24));
        assert!(approx(r.total(), 16.0));
        assert!(r.snr().iter().all(|&s| s.abs() < 1e-24));
    }

    #[test]
    fn zcurve_acgt() {
        let sig = apply_representation(&ind("ACGT"), &build_zcurve()).unwrap();
        let r = spectrum_transformed(&sig);
        assert!(r.power()[0].abs() < 1e-24);
        for k in 1..4 {
            assert!(approx(r.power()[k], 16.0), "P({k}) = {}", r.power()[k]);
        }
        assert!(approx(r.total(), 48.0));
        assert!(approx(r.average(), 12.0));
        assert!(r.snr().iter().all(|&s| approx(s, 4.0 / 3.0)));
    }

    #[test]
    fn helmert_acgt() {
        let sig = apply_representation(&ind("ACGT"), &build_helmert(&Alphabet::dna())).unwrap();
        let r = spectrum_transformed(&sig);
        assert!(approx(r.total(), 12.0));
        assert!(r.snr().iter().all(|&s| approx(s, 4.0 / 3.0)));
    }

    #[test]
    fn total_spectrum_small() {
        for text in ["ACGT", "AAAA", "ACCA", "GTTG"] {
            let c = verify_total_spectrum(&ind(text));
            assert_eq!(c.expected, 16.0);
            assert!(c.passes(), "{text}: {c:?}");
        }
    }

    #[test]
    fn ratio_check_degenerate_is_vacuous() {
        let c = snr_ratio_check(&ind("AAAA"), &build_zcurve()).unwrap();
        assert!(c.is_vacuous());
        assert_eq!(c.skipped, 3);
        assert!(c.max_deviation.is_none());
        assert!(c.passes());
    }

    #[test]
    fn ratio_check_zcurve() {
        let c = snr_ratio_check(&ind("GATTACAGATTACACCGG"), &build_zcurve()).unwrap();
        assert!(!c.is_vacuous());
        assert!(c.max_deviation.unwrap() < 1e-9);
        assert!(c.passes());
    }

    #[test]
    fn length_one() {
        let r = spectrum_base(&ind("G"));
        assert_eq!(r.power(), &[1.0]);
        assert_eq!(r.average(), 1.0);
        assert!(r.snr().is_empty());
        let c = snr_ratio_check(&ind("G"), &build_zcurve()).unwrap();
        assert!(c.is_vacuous());
        assert_eq!(c.skipped, 0);
    }

    #[test]
    fn periodicity_rounding() {
        let seq = "ACG".repeat(34);
        let r = spectrum_base(&ind(&seq[..100]));
        let p = periodicity_query(&r, 3).unwrap();
        assert_eq!((p.k, p.exact), (33, false));

        let r = spectrum_base(&ind("ACGTAC"));
        let p = periodicity_query(&r, 2).unwrap();
        assert_eq!((p.k, p.exact), (3, true));
        assert_eq!(p.power, r.power()[3]);

        let r = spectrum_base(&ind("ACGT"));
        let p = periodicity_query(&r, 3).unwrap();
        assert_eq!((p.k, p.exact), (1, false));
        assert!(approx(p.snr, 1.0));
    }

    #[test]
    fn periodicity_errors() {
        let r = spectrum_base(&ind("ACGT"));
        assert!(matches!(periodicity_query(&r, 5), Err(Error::PeriodExceedsLength { .. })));
        assert!(matches!(periodicity_query(&r, 1), Err(Error::InvalidPeriod(1))));
        let p = periodicity_query(&r, 4).unwrap();
        assert_eq!((p.k, p.exact), (1, true));
    }

    #[test]
    fn period_three_sequence_peaks_at_m_over_three() {
        let r = spectrum_base(&ind(&"ATG".repeat(40)));
        let p = periodicity_query(&r, 3).unwrap();
        assert_eq!(p.k, 40);
        let max = r.power()[1..].iter().cloned().fold(0.0, f64::max);
        assert!(approx(p.power, max));
    }
}
