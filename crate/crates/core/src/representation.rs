//! Row-orthogonal representation matrices.
//!
//! A representation matrix has `T - 1` rows over `T` symbol columns. Its rows
//! are mutually orthogonal, share one norm `d`, and are each orthogonal to the
//! all-ones vector. The all-ones row that completes the square matrix is
//! implied and never stored.
//!
//! Columns are labelled by symbol, so the same matrix can be applied to
//! sequences whose alphabet lists the symbols in a different order.

use std::path::Path;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// Pairwise row dot products, row-norm spread and row sums are checked
/// against this bound after normalising the rows to unit length.
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Bound for the column identities of the normalised matrix.
pub const COLUMN_IDENTITY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    Orthonormal,
    RowOrthogonal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepresentationMatrix {
    name: String,
    alphabet_order: Vec<char>,
    rows: Vec<Vec<f64>>,
    row_norm: f64,
    kind: MatrixKind,
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    name: String,
    alphabet_order: Vec<char>,
    rows: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<f64>,
}

/// Check that `rows` form a valid representation over `alphabet_order` and
/// measure the common row norm.
pub fn validate_row_orthogonal(
    name: impl Into<String>,
    alphabet_order: &[char],
    rows: Vec<Vec<f64>>,
) -> Result<RepresentationMatrix> {
    // Folds case and rejects duplicates / short alphabets.
    let alphabet = Alphabet::new(alphabet_order.iter().copied())?;
    let t = alphabet.len();
    if rows.len() != t - 1 {
        return Err(Error::MatrixShape(format!(
            "expected {} rows for {t} symbols, found {}",
            t - 1,
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != t {
            return Err(Error::MatrixShape(format!(
                "row {i} has {} entries, expected {t}",
                row.len()
            )));
        }
        if row.iter().any(|x| !x.is_finite()) {
            return Err(Error::MatrixShape(format!("row {i} has a non-finite entry")));
        }
    }

    let norms: Vec<f64> = rows.iter().map(|r| dot(r, r).sqrt()).collect();
    let d = norms[0];
    if d == 0.0 {
        return Err(Error::MatrixShape("row 0 is zero".into()));
    }

    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let value = dot(&rows[i], &rows[j]);
            if value.abs() / (d * d) > ORTHOGONALITY_TOL {
                return Err(Error::RowsNotOrthogonal {
                    first: i,
                    second: j,
                    dot: value,
                });
            }
        }
    }
    for (i, &n) in norms.iter().enumerate() {
        if (n - d).abs() > ORTHOGONALITY_TOL * d {
            return Err(Error::RowNormsDiffer {
                row: i,
                expected: d,
                found: n,
            });
        }
    }
    for (i, row) in rows.iter().enumerate() {
        let sum: f64 = row.iter().sum();
        if sum.abs() / d > ORTHOGONALITY_TOL {
            return Err(Error::NotOrthogonalToConstant { row: i, sum });
        }
    }

    // Cross-check: the normalised columns satisfy
    //   sum_l c_lj^2 = (T-1)/T  and  sum_l c_lj c_li = -1/T  (i != j).
    let tf = t as f64;
    for a in 0..t {
        for b in a..t {
            let value: f64 = rows.iter().map(|r| (r[a] / d) * (r[b] / d)).sum();
            let expected = if a == b { (tf - 1.0) / tf } else { -1.0 / tf };
            if (value - expected).abs() > COLUMN_IDENTITY_TOL {
                return Err(Error::ColumnIdentity {
                    first: a,
                    second: b,
                    value,
                    expected,
                });
            }
        }
    }

    let kind = if (d - 1.0).abs() <= ORTHOGONALITY_TOL {
        MatrixKind::Orthonormal
    } else {
        MatrixKind::RowOrthogonal
    };
    Ok(RepresentationMatrix {
        name: name.into(),
        alphabet_order: alphabet.symbols().to_vec(),
        rows,
        row_norm: d,
        kind,
    })
}

/// Z-curve matrix over columns (A, C, G, T): purine/pyrimidine,
/// amino/keto and weak/strong hydrogen-bond axes. `d = 2`.
pub fn build_zcurve() -> RepresentationMatrix {
    validate_row_orthogonal(
        "zcurve",
        &['A', 'C', 'G', 'T'],
        vec![
            vec![1.0, -1.0, 1.0, -1.0],
            vec![1.0, 1.0, -1.0, -1.0],
            vec![1.0, -1.0, -1.0, 1.0],
        ],
    )
    .expect("Z-curve matrix is row-orthogonal")
}

/// Regular tetrahedron vertices over columns (A, T, C, G). `d = 2/sqrt(3)`.
pub fn build_tetrahedron() -> RepresentationMatrix {
    let s2 = 2f64.sqrt();
    let s6 = 6f64.sqrt();
    validate_row_orthogonal(
        "tetrahedron",
        &['A', 'T', 'C', 'G'],
        vec![
            vec![0.0, 2.0 * s2 / 3.0, -s2 / 3.0, -s2 / 3.0],
            vec![0.0, 0.0, s6 / 3.0, -s6 / 3.0],
            vec![1.0, -1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0],
        ],
    )
    .expect("tetrahedron matrix is row-orthogonal")
}

/// Orthonormal Helmert rows for `t` symbols: row `l` (1-based) is
/// `(1, ..., 1, -l, 0, ..., 0) / sqrt(l (l + 1))` with `l` leading ones.
pub fn helmert_rows(t: usize) -> Result<Vec<Vec<f64>>> {
    if t < 2 {
        return Err(Error::HelmertSize(t));
    }
    Ok((1..t)
        .map(|l| {
            let scale = 1.0 / ((l * (l + 1)) as f64).sqrt();
            let mut row = vec![0.0; t];
            row[..l].fill(scale);
            row[l] = -(l as f64) * scale;
            row
        })
        .collect())
}

/// Helmert matrix whose columns follow `alphabet`'s order.
pub fn build_helmert(alphabet: &Alphabet) -> RepresentationMatrix {
    let rows = helmert_rows(alphabet.len()).expect("alphabets hold at least 2 symbols");
    validate_row_orthogonal("helmert", alphabet.symbols(), rows)
        .expect("Helmert rows are orthonormal")
}

/// A random orthonormal completion: Gram-Schmidt on Gaussian vectors,
/// starting from the normalised all-ones vector which is then dropped.
pub fn random_orthonormal<R: Rng + ?Sized>(alphabet: &Alphabet, rng: &mut R) -> RepresentationMatrix {
    let t = alphabet.len();
    loop {
        let mut basis: Vec<Vec<f64>> = vec![vec![1.0 / (t as f64).sqrt(); t]];
        while basis.len() < t {
            let mut v: Vec<f64> = (0..t).map(|_| rng.sample(StandardNormal)).collect();
            // Two passes keep the result orthogonal to rounding.
            for _ in 0..2 {
                for b in &basis {
                    let p = dot(&v, b);
                    v.iter_mut().zip(b).for_each(|(x, y)| *x -= p * y);
                }
            }
            let n = dot(&v, &v).sqrt();
            if n < 1e-6 {
                continue;
            }
            v.iter_mut().for_each(|x| *x /= n);
            basis.push(v);
        }
        basis.remove(0);
        if let Ok(m) = validate_row_orthogonal("random-orthonormal", alphabet.symbols(), basis) {
            return m;
        }
    }
}

impl RepresentationMatrix {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Column symbols, in stored order.
    pub fn alphabet_order(&self) -> &[char] {
        &self.alphabet_order
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Common row norm `d`.
    pub fn row_norm(&self) -> f64 {
        self.row_norm
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    /// Number of symbols `T`.
    pub fn symbol_count(&self) -> usize {
        self.alphabet_order.len()
    }

    /// Number of output channels, `T - 1`.
    pub fn channel_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_of(&self, symbol: char) -> Option<usize> {
        let symbol = crate::alphabet::fold_case(symbol);
        self.alphabet_order.iter().position(|&c| c == symbol)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Multiply every entry by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x * factor).collect())
            .collect();
        validate_row_orthogonal(self.name.clone(), &self.alphabet_order, rows)
    }

    /// The same matrix with its columns permuted into `order`.
    pub fn with_column_order(&self, order: &[char]) -> Result<Self> {
        let cols = order
            .iter()
            .map(|&c| self.column_of(c).ok_or(Error::AlphabetMismatch(c)))
            .collect::<Result<Vec<_>>>()?;
        if cols.len() != self.symbol_count() {
            return Err(Error::MatrixShape(format!(
                "column order has {} symbols, matrix has {}",
                cols.len(),
                self.symbol_count()
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        validate_row_orthogonal(self.name.clone(), order, rows)
    }

    pub fn to_json(&self) -> String {
        let file = MatrixFile {
            name: self.name.clone(),
            alphabet_order: self.alphabet_order.clone(),
            rows: self.rows.clone(),
            d: Some(self.row_norm),
        };
        serde_json::to_string_pretty(&file).expect("matrix serialises")
    }

    /// Parse and validate a matrix from JSON. A declared `d`, when present,
    /// must agree with the measured row norm.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: MatrixFile = serde_json::from_str(text)?;
        let matrix = validate_row_orthogonal(file.name, &file.alphabet_order, file.rows)?;
        if let Some(declared) = file.d {
            if (declared - matrix.row_norm).abs() > 1e-9 * matrix.row_norm {
                return Err(Error::DeclaredNormMismatch {
                    declared,
                    measured: matrix.row_norm,
                });
            }
        }
        Ok(matrix)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
