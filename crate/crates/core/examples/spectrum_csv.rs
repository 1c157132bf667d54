//! Full power spectrum and SNR profile for one representation, as CSV.

use symspec::prelude::*;

fn main() -> symspec::Result<()> {
    let seq = sequence_from_string(&"ATGGCC".repeat(20), &Alphabet::dna())?;
    let r = spectrum_transformed(&apply_representation(&build_indicators(&seq), &build_zcurve())?);
    let m = r.len();
    println!("k,frequency,power,snr");
    for k in 1..m {
        println!("{k},{:.6},{:.6e},{:.6e}", k as f64 / m as f64, r.power()[k], r.snr()[k - 1]);
    }
    Ok(())
}
