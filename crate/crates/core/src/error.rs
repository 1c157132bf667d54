use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty sequence{}", record_suffix(.record))]
    EmptySequence { record: Option<String> },

    #[error("no sequence records found")]
    NoRecords,

    /// `position` is 1-based within the record, `line` is 1-based within the input.
    #[error("invalid symbol '{symbol}' at position {position}{}", line_suffix(*.line))]
    InvalidSymbol {
        symbol: char,
        position: usize,
        line: Option<usize>,
    },

    #[error("duplicate symbol '{0}' in alphabet")]
    DuplicateSymbol(char),

    #[error("alphabet needs at least 2 symbols, found {0}")]
    AlphabetTooSmall(usize),

    #[error("matrix shape invalid: {0}")]
    MatrixShape(String),

    #[error("rows not orthogonal: rows {first} and {second} have dot product {dot:e}")]
    RowsNotOrthogonal { first: usize, second: usize, dot: f64 },

    #[error("row norms differ: row 0 has norm {expected}, row {row} has norm {found}")]
    RowNormsDiffer { row: usize, expected: f64, found: f64 },

    #[error("rows not orthogonal to constant row: row {row} sums to {sum}")]
    NotOrthogonalToConstant { row: usize, sum: f64 },

    #[error("column identity violated at columns ({first}, {second}): {value} != {expected}")]
    ColumnIdentity {
        first: usize,
        second: usize,
        value: f64,
        expected: f64,
    },

    #[error("declared row norm {declared} does not match measured {measured}")]
    DeclaredNormMismatch { declared: f64, measured: f64 },

    #[error("alphabet mismatch: symbol '{0}' is not shared by the sequence and the representation")]
    AlphabetMismatch(char),

    #[error("Helmert matrix needs T >= 2, got {0}")]
    HelmertSize(usize),

    #[error("period must be at least 2, got {0}")]
    InvalidPeriod(usize),

    #[error("period {period} exceeds sequence length {length}")]
    PeriodExceedsLength { period: usize, length: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{origin}: {source}")]
    Input {
        origin: String,
        #[source]
        source: Box<Error>,
    },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

fn record_suffix(record: &Option<String>) -> String {
    match record {
        Some(id) => format!(" (record '{id}')"),
        None => String::new(),
    }
}

fn line_suffix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!(" (line {l})"),
        None => String::new(),
    }
}
