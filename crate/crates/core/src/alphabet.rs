//! Ordered symbol alphabets.
//!
//! An [`Alphabet`] fixes the index of every symbol. Indices are 0-based:
//! the first symbol has index 0, the last has index `T - 1`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Nucleotides in the column order used by the Z-curve matrix.
pub const DNA: &str = "ACGT";

/// The 20 standard amino acids, one-letter codes in lexicographic order.
pub const PROTEIN: &str = "ACDEFGHIKLMNPQRSTVWY";

// Case-stable symbols only: upper-case Latin, digits, upper-case Greek.
const GENERIC: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789ΑΒΓΔΕΖΗΘΙΚΛΜΝΞΟΠΡΣΤΥΦΧΨΩ";

#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    // ASCII fast path; non-ASCII symbols fall back to a linear scan.
    ascii_index: [u8; 128],
}

const NO_INDEX: u8 = u8::MAX;

impl Alphabet {
    /// Build an alphabet keeping the given order. Symbols are upper-cased.
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().map(fold_case).collect();
        let mut seen = Vec::with_capacity(symbols.len());
        for &c in &symbols {
            if seen.contains(&c) {
                return Err(Error::DuplicateSymbol(c));
            }
            seen.push(c);
        }
        if symbols.len() < 2 {
            return Err(Error::AlphabetTooSmall(symbols.len()));
        }
        if symbols.len() >= NO_INDEX as usize {
            return Err(Error::Config(format!(
                "alphabets are limited to {} symbols",
                NO_INDEX as usize - 1
            )));
        }
        let mut ascii_index = [NO_INDEX; 128];
        for (i, &c) in symbols.iter().enumerate() {
            if c.is_ascii() {
                ascii_index[c as usize] = i as u8;
            }
        }
        Ok(Self {
            symbols,
            ascii_index,
        })
    }

    /// Sorted set of the distinct (case-folded) characters in `text`,
    /// ignoring whitespace.
    pub fn infer(text: &str) -> Result<Self> {
        let mut symbols: Vec<char> = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(fold_case)
            .collect();
        symbols.sort_unstable();
        symbols.dedup();
        Self::new(symbols)
    }

    pub fn dna() -> Self {
        Self::new(DNA.chars()).expect("static alphabet")
    }

    pub fn protein() -> Self {
        Self::new(PROTEIN.chars()).expect("static alphabet")
    }

    /// Canonical alphabet of size `size`: DNA for 4, amino acids for 20,
    /// otherwise the first `size` of `A-Z`, `0-9` and the upper-case Greek
    /// letters (at most 60).
    pub fn canonical(size: usize) -> Result<Self> {
        match size {
            4 => Ok(Self::dna()),
            20 => Ok(Self::protein()),
            n if n > GENERIC.chars().count() => Err(Error::Config(format!(
                "no canonical alphabet of size {n} (maximum {})",
                GENERIC.chars().count()
            ))),
            n => Self::new(GENERIC.chars().take(n)),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; alphabets hold at least two symbols.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> Option<char> {
        self.symbols.get(index).copied()
    }

    /// Index of `c` after case folding.
    pub fn index_of(&self, c: char) -> Option<usize> {
        let c = fold_case(c);
        if c.is_ascii() {
            match self.ascii_index[c as usize] {
                NO_INDEX => None,
                i => Some(i as usize),
            }
        } else {
            self.symbols.iter().position(|&s| s == c)
        }
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    /// True when both alphabets hold the same symbols, in any order.
    pub fn same_symbols(&self, other: &[char]) -> bool {
        self.len() == other.len() && other.iter().all(|&c| self.contains(c))
    }
}

pub(crate) fn fold_case(c: char) -> char {
    c.to_uppercase().next().unwrap_or(c)
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl std::str::FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_order_is_kept() {
        let a = Alphabet::new("TGCA".chars()).unwrap();
        assert_eq!(a.index_of('T'), Some(0));
        assert_eq!(a.index_of('a'), Some(3));
        assert_eq!(a.to_string(), "TGCA");
    }

    #[test]
    fn inferred_alphabet_is_sorted() {
        let a = Alphabet::infer("tgc a\nTTG").unwrap();
        assert_eq!(a.symbols(), &['A', 'C', 'G', 'T']);
    }

    #[test]
    fn rejects_duplicates_and_small() {
        assert!(matches!(
            Alphabet::new("ACA".chars()),
            Err(Error::DuplicateSymbol('A'))
        ));
        assert!(matches!(
            Alphabet::new("Aa".chars()),
            Err(Error::DuplicateSymbol('A'))
        ));
        assert!(matches!(
            Alphabet::new("A".chars()),
            Err(Error::AlphabetTooSmall(1))
        ));
        assert!(matches!(Alphabet::infer("aaaa"), Err(Error::AlphabetTooSmall(1))));
    }

    #[test]
    fn index_map_is_a_bijection() {
        for size in [2, 4, 7, 20, 60] {
            let a = Alphabet::canonical(size).unwrap();
            assert_eq!(a.len(), size);
            for (i, &c) in a.symbols().iter().enumerate() {
                assert_eq!(a.index_of(c), Some(i));
                assert_eq!(a.symbol(i), Some(c));
            }
        }
        assert!(Alphabet::canonical(61).is_err());
    }

    #[test]
    fn non_ascii_symbols() {
        let a = Alphabet::new("αβγ".chars()).unwrap();
        assert_eq!(a.index_of('Β'), Some(1));
        assert_eq!(a.index_of('δ'), None);
    }
}
