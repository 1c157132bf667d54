//! Spectral analysis of symbolic sequences.
//!
//! A sequence over a `T`-letter alphabet is turned into `T` binary indicator
//! sequences. Those can be analysed directly (the base-vector representation)
//! or mixed by a row-orthogonal `(T-1) x T` matrix such as the Z-curve, the
//! tetrahedron or a Helmert matrix. For every representation the crate
//! computes DFT power spectra, the total spectrum, mean noise and the
//! per-frequency signal-to-noise ratio, and checks two identities:
//!
//! * the base total spectrum is `m^2` for a length-`m` sequence;
//! * any row-orthogonal representation has `SNR(k)` equal to `T/(T-1)` times
//!   the base `SNR(k)`.
//!
//! ```
//! use symspec::prelude::*;
//!
//! let seq = sequence_from_string("ATGATGATGCAT", &Alphabet::dna()).unwrap();
//! let ind = build_indicators(&seq);
//! let base = spectrum_base(&ind);
//! assert!((base.total() - 144.0).abs() < 1e-9);
//!
//! let z = apply_representation(&ind, &build_zcurve()).unwrap();
//! let zs = spectrum_transformed(&z);
//! let peak = periodicity_query(&zs, 3).unwrap();
//! assert_eq!(peak.k, 4);
//! ```

pub mod alphabet;
pub mod dft;
pub mod error;
pub mod identities;
pub mod indicator;
pub mod random;
pub mod report;
pub mod representation;
pub mod sequence;
pub mod spectrum;
pub mod transform;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::alphabet::Alphabet;
    pub use crate::dft::{dft_fast, dft_fast_real, dft_naive, dft_naive_real, ChannelSpectrum};
    pub use crate::error::{Error, Result};
    pub use crate::indicator::{build_indicators, IndicatorMatrix};
    pub use crate::representation::{
        build_helmert, build_tetrahedron, build_zcurve, validate_row_orthogonal, MatrixKind,
        RepresentationMatrix,
    };
    pub use crate::sequence::{parse_fasta, parse_plain, sequence_from_string, AlphabetPolicy, SymbolicSequence};
    pub use crate::spectrum::{
        periodicity_query, snr_ratio_check, spectrum_base, spectrum_transformed,
        verify_total_spectrum, SpectrumReport,
    };
    pub use crate::transform::{apply_representation, cumulative_coordinates, TransformedSignal};
}
