//! Binary indicator sequences, one per alphabet symbol.

use crate::alphabet::Alphabet;
use crate::sequence::SymbolicSequence;

/// `T x m` binary matrix: `row(t)[j] == 1` iff position `j` holds symbol `t`.
///
/// Every column holds exactly one 1, so the supports of the rows partition
/// `0..m` and the row sums are the symbol counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorMatrix {
    alphabet: Alphabet,
    rows: Vec<Vec<u8>>,
    len: usize,
}

pub fn build_indicators(seq: &SymbolicSequence) -> IndicatorMatrix {
    let m = seq.len();
    let mut rows = vec![vec![0u8; m]; seq.alphabet().len()];
    for (j, &t) in seq.indices().iter().enumerate() {
        rows[t][j] = 1;
    }
    IndicatorMatrix {
        alphabet: seq.alphabet().clone(),
        rows,
        len: m,
    }
}

impl IndicatorMatrix {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Sequence length `m`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn alphabet_size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn row(&self, t: usize) -> &[u8] {
        &self.rows[t]
    }

    pub fn row_f64(&self, t: usize) -> Vec<f64> {
        self.rows[t].iter().map(|&u| f64::from(u)).collect()
    }

    /// Symbol index at position `j` (the row holding the 1 in column `j`).
    pub fn symbol_at(&self, j: usize) -> usize {
        self.rows
            .iter()
            .position(|r| r[j] == 1)
            .expect("every column has exactly one 1")
    }

    /// Positions holding symbol `t`.
    pub fn support(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[t]
            .iter()
            .enumerate()
            .filter(|(_, &u)| u == 1)
            .map(|(j, _)| j)
    }

    /// Occurrences of each symbol, in alphabet order.
    pub fn counts(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&u| u as usize).sum())
            .collect()
    }

    /// Column sums; identically 1 for a well-formed matrix.
    pub fn column_sums(&self) -> Vec<u32> {
        (0..self.len)
            .map(|j| self.rows.iter().map(|r| u32::from(r[j])).sum())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::sequence_from_string;

    fn ind(text: &str) -> IndicatorMatrix {
        build_indicators(&sequence_from_string(text, &Alphabet::dna()).unwrap())
    }

    #[test]
    fn one_symbol_each() {
        let m = ind("ACGT");
        assert_eq!(m.row(0), &[1, 0, 0, 0]);
        assert_eq!(m.row(1), &[0, 1, 0, 0]);
        assert_eq!(m.row(2), &[0, 0, 1, 0]);
        assert_eq!(m.row(3), &[0, 0, 0, 1]);
    }

    #[test]
    fn single_symbol() {
        let m = ind("AAAA");
        assert_eq!(m.row(0), &[1, 1, 1, 1]);
        assert!(m.rows()[1..].iter().all(|r| r.iter().all(|&u| u == 0)));
    }

    #[test]
    fn counts_and_support() {
        let m = ind("ACCA");
        assert_eq!(m.row(0), &[1, 0, 0, 1]);
        assert_eq!(m.row(1), &[0, 1, 1, 0]);
        assert_eq!(m.counts(), vec![2, 2, 0, 0]);
        assert_eq!(m.support(1).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(m.symbol_at(3), 0);
    }

    #[test]
    fn columns_partition_positions() {
        let m = ind("GATTACAGATTACA");
        assert!(m.column_sums().iter().all(|&s| s == 1));
        assert_eq!(m.counts().iter().sum::<usize>(), m.len());
    }
}
