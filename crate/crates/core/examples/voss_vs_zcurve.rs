//! Period-3 SNR of a synthetic coding-like sequence under the indicator
//! (Voss) representation and the Z-curve.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symspec::prelude::*;

fn main() -> symspec::Result<()> {
    // Codon-position bias: G favoured at the first position of each triplet.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let text: String = (0..1236)
        .map(|j| {
            if j % 3 == 0 && rng.random_bool(0.4) {
                'G'
            } else {
                ['A', 'C', 'G', 'T'][rng.random_range(0..4)]
            }
        })
        .collect();
    let seq = sequence_from_string(&text, &Alphabet::dna())?;
    let ind = build_indicators(&seq);

    let base = spectrum_base(&ind);
    let z = spectrum_transformed(&apply_representation(&ind, &build_zcurve())?);
    let bp = periodicity_query(&base, 3)?;
    let zp = periodicity_query(&z, 3)?;

    println!("m = {}, k = {}", seq.len(), bp.k);
    println!("{:<8} {:>12} {:>10} {:>10}", "method", "total", "E", "SNR");
    for (name, r, p) in [("base", &base, &bp), ("zcurve", &z, &zp)] {
        println!("{name:<8} {:>12.0} {:>10.1} {:>10.4}", r.total(), r.average(), p.snr);
    }
    println!("ratio {:.6} (expected {:.6})", zp.snr / bp.snr, 4.0 / 3.0);
    Ok(())
}
