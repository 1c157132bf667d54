//! Validated symbolic sequences and FASTA / plain-text ingestion.

use crate::alphabet::{fold_case, Alphabet};
use crate::error::{Error, Result};

/// A non-empty sequence of alphabet indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicSequence {
    alphabet: Alphabet,
    indices: Vec<usize>,
    id: Option<String>,
}

impl SymbolicSequence {
    pub fn from_indices(alphabet: Alphabet, indices: Vec<usize>, id: Option<String>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptySequence { record: id });
        }
        if let Some((pos, _)) = indices.iter().enumerate().find(|(_, &i)| i >= alphabet.len()) {
            return Err(Error::Config(format!(
                "index {} at position {} is outside an alphabet of size {}",
                indices[pos],
                pos + 1,
                alphabet.len()
            )));
        }
        Ok(Self {
            alphabet,
            indices,
            id,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Alphabet index of every position.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn id(&self) -> Option<&str> {
        self.id.as_deref()
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    pub fn to_text(&self) -> String {
        self.indices
            .iter()
            .map(|&i| self.alphabet.symbols()[i])
            .collect()
    }

    /// FASTA record with the body wrapped at `width` symbols per line.
    pub fn to_fasta(&self, width: usize) -> String {
        let width = width.max(1);
        let text: Vec<char> = self.to_text().chars().collect();
        let mut out = format!(">{}\n", self.id.as_deref().unwrap_or(""));
        for chunk in text.chunks(width) {
            out.extend(chunk);
            out.push('\n');
        }
        out
    }
}

/// Map `text` onto `alphabet`. Whitespace is not allowed here; use
/// [`parse_fasta`] for wrapped input.
pub fn sequence_from_string(text: &str, alphabet: &Alphabet) -> Result<SymbolicSequence> {
    if text.is_empty() {
        return Err(Error::EmptySequence { record: None });
    }
    let indices = text
        .chars()
        .enumerate()
        .map(|(pos, c)| {
            alphabet.index_of(c).ok_or(Error::InvalidSymbol {
                symbol: fold_case(c),
                position: pos + 1,
                line: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolicSequence {
        alphabet: alphabet.clone(),
        indices,
        id: None,
    })
}

/// How the alphabet of parsed records is established.
#[derive(Clone, Debug, Default)]
pub enum AlphabetPolicy {
    Explicit(Alphabet),
    /// Sorted set of distinct characters over all records of the input.
    #[default]
    Infer,
}

// Record body with the input line of every character, for error reporting.
struct RawRecord {
    id: Option<String>,
    body: Vec<(char, usize)>,
}

impl RawRecord {
    fn new(id: Option<String>) -> Self {
        Self { id, body: Vec::new() }
    }

    fn push_line(&mut self, line: &str, line_no: usize) {
        self.body.extend(
            line.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| (fold_case(c), line_no)),
        );
    }
}

/// Parse FASTA text. Lines starting with `>` open a record; text before the
/// first header (or a file without headers) forms one unnamed record.
/// Whitespace inside records is ignored and case is folded to upper.
pub fn parse_fasta(text: &str, policy: &AlphabetPolicy) -> Result<Vec<SymbolicSequence>> {
    let mut records: Vec<RawRecord> = Vec::new();
    let mut current = RawRecord::new(None);
    let mut in_header_record = false;
    for (idx, line) in text.lines().enumerate() {
        if let Some(header) = line.strip_prefix('>') {
            if in_header_record || !current.body.is_empty() {
                records.push(current);
            }
            current = RawRecord::new(Some(header.trim().to_string()));
            in_header_record = true;
        } else {
            current.push_line(line, idx + 1);
        }
    }
    if in_header_record || !current.body.is_empty() {
        records.push(current);
    }
    finish(records, policy)
}

/// Treat the whole input as a single headerless record; `>` is an ordinary
/// character here.
pub fn parse_plain(text: &str, policy: &AlphabetPolicy) -> Result<Vec<SymbolicSequence>> {
    let mut record = RawRecord::new(None);
    for (idx, line) in text.lines().enumerate() {
        record.push_line(line, idx + 1);
    }
    finish(vec![record], policy)
}

fn finish(records: Vec<RawRecord>, policy: &AlphabetPolicy) -> Result<Vec<SymbolicSequence>> {
    if records.is_empty() {
        return Err(Error::NoRecords);
    }
    if let Some(empty) = records.iter().find(|r| r.body.is_empty()) {
        return Err(Error::EmptySequence {
            record: empty.id.clone(),
        });
    }
    let alphabet = match policy {
        AlphabetPolicy::Explicit(a) => a.clone(),
        AlphabetPolicy::Infer => {
            let all: String = records.iter().flat_map(|r| r.body.iter().map(|&(c, _)| c)).collect();
            Alphabet::infer(&all)?
        }
    };
    records
        .into_iter()
        .map(|r| {
            let indices = r
                .body
                .iter()
                .enumerate()
                .map(|(pos, &(c, line))| {
                    alphabet.index_of(c).ok_or(Error::InvalidSymbol {
                        symbol: c,
                        position: pos + 1,
                        line: Some(line),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SymbolicSequence {
                alphabet: alphabet.clone(),
                indices,
                id: r.id,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna() -> AlphabetPolicy {
        AlphabetPolicy::Explicit(Alphabet::dna())
    }

    #[test]
    fn single_record_explicit() {
        let seqs = parse_fasta(">x\nACGT\n", &dna()).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].id(), Some("x"));
        assert_eq!(seqs[0].len(), 4);
        assert_eq!(seqs[0].indices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn headerless_infer_folds_case() {
        let seqs = parse_fasta("acg\ntt", &AlphabetPolicy::Infer).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].alphabet().symbols(), &['A', 'C', 'G', 'T']);
        assert_eq!(seqs[0].len(), 5);
        assert_eq!(seqs[0].id(), None);
    }

    #[test]
    fn foreign_symbol_names_position() {
        let err = parse_fasta(">x\nACGU\n", &dna()).unwrap_err();
        match err {
            Error::InvalidSymbol { symbol, position, line } => {
                assert_eq!(symbol, 'U');
                assert_eq!(position, 4);
                assert_eq!(line, Some(2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn position_counts_across_wrapped_lines() {
        let err = parse_fasta(">x\nACG\nTAN\n", &dna()).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidSymbol { symbol: 'N', position: 6, line: Some(3) }
        ));
    }

    #[test]
    fn empty_record_and_no_records() {
        let err = parse_fasta(">x\n>y\nACGT\n", &dna()).unwrap_err();
        assert!(err.to_string().starts_with("empty sequence"), "{err}");
        assert!(matches!(parse_fasta("", &dna()), Err(Error::NoRecords)));
        assert!(matches!(parse_fasta("\n  \n", &dna()), Err(Error::NoRecords)));
    }

    #[test]
    fn multiple_records_share_inferred_alphabet() {
        let seqs = parse_fasta(">a\nAC\n>b\nGT\n", &AlphabetPolicy::Infer).unwrap();
        assert_eq!(seqs.len(), 2);
        assert_eq!(seqs[0].alphabet(), seqs[1].alphabet());
        assert_eq!(seqs[1].indices(), &[2, 3]);
    }

    #[test]
    fn plain_mode_ignores_headers() {
        let a = Alphabet::new("AC>".chars()).unwrap();
        let seqs = parse_plain(">A\nC", &AlphabetPolicy::Explicit(a)).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].len(), 3);
    }

    #[test]
    fn from_string() {
        let s = sequence_from_string("AAAA", &Alphabet::dna()).unwrap();
        assert_eq!(s.indices(), &[0, 0, 0, 0]);
        assert!(matches!(
            sequence_from_string("", &Alphabet::dna()),
            Err(Error::EmptySequence { .. })
        ));
        let p = sequence_from_string(crate::alphabet::PROTEIN, &Alphabet::protein()).unwrap();
        assert_eq!(p.len(), 20);
        assert_eq!(p.alphabet().len(), 20);
    }

    #[test]
    fn ambiguity_codes_are_ordinary_symbols() {
        let a = Alphabet::new("ACGTN-".chars()).unwrap();
        let s = sequence_from_string("AN-T", &a).unwrap();
        assert_eq!(s.indices(), &[0, 4, 5, 3]);
    }
}
