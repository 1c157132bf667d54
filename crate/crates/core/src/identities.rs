//! Numerical checks of the intermediate identities behind the total-spectrum
//! and SNR-ratio results. Each returns the largest observed deviation.

use serde::Serialize;

use crate::dft::{dft_fast_real, ChannelSpectrum};
use crate::indicator::IndicatorMatrix;
use crate::spectrum::{indicator_spectra, THEOREM_TOL};

/// Per symbol: `sum_k |U_t(k)|^2 = m * count_t`. Returns the largest
/// relative deviation (absolute for symbols that never occur).
pub fn channel_energy_deviation(ind: &IndicatorMatrix, spectra: &[ChannelSpectrum]) -> f64 {
    let m = ind.len() as f64;
    ind.counts()
        .iter()
        .zip(spectra)
        .map(|(&count, spec)| {
            let energy: f64 = spec.power().iter().sum();
            let expected = m * count as f64;
            (energy - expected).abs() / expected.max(1.0)
        })
        .fold(0.0, f64::max)
}

/// Parseval: `sum_j x(j)^2 = (1/m) sum_k |X(k)|^2`, relative to the
/// time-domain energy (absolute when that is zero).
pub fn parseval_deviation(signal: &[f64], spectrum: &ChannelSpectrum) -> f64 {
    let m = signal.len() as f64;
    let time: f64 = signal.iter().map(|x| x * x).sum();
    let freq: f64 = spectrum.power().iter().sum::<f64>() / m;
    (time - freq).abs() / time.max(1.0)
}

/// The indicator rows sum to the all-ones sequence, whose DFT is `m` at
/// `k = 0` and zero elsewhere. Returns `(|X(0) - m| / m, max_{k>0} |X(k)| / m)`.
pub fn row_sum_dft_deviation(ind: &IndicatorMatrix) -> (f64, f64) {
    let m = ind.len();
    let sums: Vec<f64> = ind.column_sums().into_iter().map(f64::from).collect();
    let spec = dft_fast_real(&sums);
    let mf = m as f64;
    let dc = (spec.values()[0].re - mf).abs().max(spec.values()[0].im.abs()) / mf;
    let rest = spec.values()[1..]
        .iter()
        .map(|v| v.norm() / mf)
        .fold(0.0, f64::max);
    (dc, rest)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub channel_energy: f64,
    pub parseval: f64,
    pub conjugate_symmetry: f64,
    pub row_sum_dc: f64,
    pub row_sum_off_dc: f64,
}

impl IdentityReport {
    pub fn passes(&self) -> bool {
        [
            self.channel_energy,
            self.parseval,
            self.conjugate_symmetry,
            self.row_sum_dc,
            self.row_sum_off_dc,
        ]
        .iter()
        .all(|&d| d < THEOREM_TOL)
    }
}

/// All identities on one indicator matrix. Conjugate symmetry is measured
/// relative to `m`, the largest possible bin magnitude of an indicator row.
pub fn check_identities(ind: &IndicatorMatrix) -> IdentityReport {
    let spectra = indicator_spectra(ind);
    let m = ind.len() as f64;
    let parseval = (0..ind.alphabet_size())
        .map(|t| parseval_deviation(&ind.row_f64(t), &spectra[t]))
        .fold(0.0, f64::max);
    let conjugate_symmetry = spectra
        .iter()
        .map(|s| s.conjugate_symmetry_error() / m)
        .fold(0.0, f64::max);
    let (row_sum_dc, row_sum_off_dc) = row_sum_dft_deviation(ind);
    IdentityReport {
        channel_energy: channel_energy_deviation(ind, &spectra),
        parseval,
        conjugate_symmetry,
        row_sum_dc,
        row_sum_off_dc,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::indicator::build_indicators;
    use crate::sequence::sequence_from_string;

    #[test]
    fn identities_hold_on_small_sequences() {
        for text in ["A", "AC", "ACCA", "GATTACA", "TTTTTTTTTT"] {
            let ind = build_indicators(&sequence_from_string(text, &Alphabet::dna()).unwrap());
            let r = check_identities(&ind);
            assert!(r.passes(), "{text}: {r:?}");
        }
    }

    #[test]
    fn energy_per_channel() {
        let ind = build_indicators(&sequence_from_string("ACCAG", &Alphabet::dna()).unwrap());
        let spectra = indicator_spectra(&ind);
        let energies: Vec<f64> = spectra.iter().map(|s| s.power().iter().sum()).collect();
        let expected = [10.0, 10.0, 5.0, 0.0];
        for (e, x) in energies.iter().zip(expected) {
            assert!((e - x).abs() < 1e-12);
        }
    }
}
