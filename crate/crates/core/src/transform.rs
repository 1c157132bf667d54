//! Applying a representation matrix to the indicator sequences.

use crate::error::{Error, Result};
use crate::indicator::IndicatorMatrix;
use crate::representation::RepresentationMatrix;

/// `T - 1` real channels produced by a representation matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformedSignal {
    name: String,
    row_norm: f64,
    symbol_count: usize,
    channels: Vec<Vec<f64>>,
}

impl TransformedSignal {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn row_norm(&self) -> f64 {
        self.row_norm
    }

    /// Alphabet size `T` of the source sequence.
    pub fn symbol_count(&self) -> usize {
        self.symbol_count
    }

    pub fn channels(&self) -> &[Vec<f64>] {
        &self.channels
    }

    pub fn len(&self) -> usize {
        self.channels.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Map matrix columns onto alphabet indices by symbol: `result[t]` is the
/// matrix column of alphabet symbol `t`.
pub fn match_columns(ind: &IndicatorMatrix, rep: &RepresentationMatrix) -> Result<Vec<usize>> {
    let alphabet = ind.alphabet();
    if let Some(&c) = rep.alphabet_order().iter().find(|&&c| !alphabet.contains(c)) {
        return Err(Error::AlphabetMismatch(c));
    }
    alphabet
        .symbols()
        .iter()
        .map(|&c| rep.column_of(c).ok_or(Error::AlphabetMismatch(c)))
        .collect()
}

/// `channel[l][j] = sum_t rows[l][col(t)] * u_t(j)`.
///
/// Each indicator column is a standard basis vector, so the dot product
/// reduces to selecting the matrix entry of the symbol at `j`.
pub fn apply_representation(ind: &IndicatorMatrix, rep: &RepresentationMatrix) -> Result<TransformedSignal> {
    let cols = match_columns(ind, rep)?;
    let symbols: Vec<usize> = (0..ind.len()).map(|j| ind.symbol_at(j)).collect();
    let channels = rep
        .rows()
        .iter()
        .map(|row| symbols.iter().map(|&t| row[cols[t]]).collect())
        .collect();
    Ok(TransformedSignal {
        name: rep.name().to_string(),
        row_norm: rep.row_norm(),
        symbol_count: rep.symbol_count(),
        channels,
    })
}

/// Running sums of every channel; for the Z-curve these are the
/// counts-difference curves, e.g. `x1(n) = f_A + f_G - f_C - f_T` over the
/// first `n + 1` symbols.
pub fn cumulative_coordinates(sig: &TransformedSignal) -> Vec<Vec<f64>> {
    sig.channels
        .iter()
        .map(|ch| {
            ch.iter()
                .scan(0.0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::indicator::build_indicators;
    use crate::representation::{build_helmert, build_tetrahedron, build_zcurve};
    use crate::sequence::sequence_from_string;

    fn ind(text: &str) -> IndicatorMatrix {
        build_indicators(&sequence_from_string(text, &Alphabet::dna()).unwrap())
    }

    #[test]
    fn zcurve_single_symbols() {
        let z = build_zcurve();
        let a = apply_representation(&ind("A"), &z).unwrap();
        assert_eq!(a.channels(), &[vec![1.0], vec![1.0], vec![1.0]]);
        let t = apply_representation(&ind("T"), &z).unwrap();
        assert_eq!(t.channels(), &[vec![-1.0], vec![-1.0], vec![1.0]]);
    }

    #[test]
    fn zcurve_acgt() {
        let s = apply_representation(&ind("ACGT"), &build_zcurve()).unwrap();
        assert_eq!(s.channels()[0], vec![1.0, -1.0, 1.0, -1.0]);
        assert_eq!(s.channels()[1], vec![1.0, 1.0, -1.0, -1.0]);
        assert_eq!(s.channels()[2], vec![1.0, -1.0, -1.0, 1.0]);
        assert_eq!(s.row_norm(), 2.0);
        assert_eq!(s.symbol_count(), 4);
    }

    #[test]
    fn zcurve_outputs_are_plus_minus_one() {
        let s = apply_representation(&ind("GATTACACCGTAGGCTTA"), &build_zcurve()).unwrap();
        assert!(s.channels().iter().flatten().all(|&x| x == 1.0 || x == -1.0));
    }

    #[test]
    fn constant_sequence_gives_constant_channels() {
        let s = apply_representation(&ind("AAAA"), &build_zcurve()).unwrap();
        assert!(s.channels().iter().all(|c| c == &vec![1.0; 4]));
    }

    #[test]
    fn helmert_columns_are_images_of_basis_vectors() {
        let alphabet = Alphabet::new("WXYZ".chars()).unwrap();
        let seq = sequence_from_string("ZYXWWZ", &alphabet).unwrap();
        let h = build_helmert(&alphabet);
        let s = apply_representation(&build_indicators(&seq), &h).unwrap();
        for (j, &t) in seq.indices().iter().enumerate() {
            for l in 0..3 {
                assert_eq!(s.channels()[l][j], h.rows()[l][t]);
            }
        }
    }

    #[test]
    fn tetrahedron_matches_by_symbol() {
        // Column order (A, T, C, G) must not be applied positionally.
        let s = apply_representation(&ind("C"), &build_tetrahedron()).unwrap();
        let s2 = 2f64.sqrt();
        let s6 = 6f64.sqrt();
        let expected = [-s2 / 3.0, s6 / 3.0, -1.0 / 3.0];
        for (ch, e) in s.channels().iter().zip(expected) {
            assert!((ch[0] - e).abs() < 1e-15);
        }
    }

    #[test]
    fn alphabet_mismatch_names_symbol() {
        let seq = sequence_from_string("ACGU", &Alphabet::new("ACGU".chars()).unwrap()).unwrap();
        let err = apply_representation(&build_indicators(&seq), &build_zcurve()).unwrap_err();
        assert!(matches!(err, Error::AlphabetMismatch('T')));

        let seq = sequence_from_string("AB", &Alphabet::new("AB".chars()).unwrap()).unwrap();
        let err = apply_representation(&build_indicators(&seq), &build_zcurve()).unwrap_err();
        assert!(matches!(err, Error::AlphabetMismatch('C')));
    }

    #[test]
    fn cumulative_curves() {
        let z = build_zcurve();
        let aaaa = apply_representation(&ind("AAAA"), &z).unwrap();
        assert_eq!(cumulative_coordinates(&aaaa)[0], vec![1.0, 2.0, 3.0, 4.0]);
        let acgt = apply_representation(&ind("ACGT"), &z).unwrap();
        assert_eq!(cumulative_coordinates(&acgt)[0], vec![1.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn final_cumulative_value_is_count_difference() {
        let text = "GGATCCATTAGCAAAGTCTTTTGACG";
        let m = ind(text);
        let x = cumulative_coordinates(&apply_representation(&m, &build_zcurve()).unwrap());
        let f = m.counts(); // A, C, G, T
        let (fa, fc, fg, ft) = (f[0] as f64, f[1] as f64, f[2] as f64, f[3] as f64);
        let last = text.len() - 1;
        assert_eq!(x[0][last], fa + fg - fc - ft);
        assert_eq!(x[1][last], fa + fc - fg - ft);
        assert_eq!(x[2][last], fa + ft - fc - fg);
    }
}
