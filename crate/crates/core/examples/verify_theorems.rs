//! Seeded random corpus checked against the total-spectrum and SNR-ratio
//! identities for several alphabet sizes.

use symspec::alphabet::Alphabet;
use symspec::identities::check_identities;
use symspec::prelude::*;
use symspec::random::random_corpus;

fn main() -> symspec::Result<()> {
    for size in [2, 4, 20] {
        let alphabet = Alphabet::canonical(size)?;
        let helmert = build_helmert(&alphabet);
        let corpus = random_corpus(7, 25, &alphabet, 1, 2000);
        let mut total_err: f64 = 0.0;
        let mut ratio_err: f64 = 0.0;
        let mut identities_ok = true;
        for seq in &corpus {
            let ind = build_indicators(seq);
            total_err = total_err.max(verify_total_spectrum(&ind).relative_error);
            let check = snr_ratio_check(&ind, &helmert)?;
            ratio_err = ratio_err.max(check.max_relative_deviation().unwrap_or(0.0));
            identities_ok &= check_identities(&ind).passes();
        }
        println!(
            "T = {size:>2}: {} sequences, total err {total_err:.1e}, ratio err {ratio_err:.1e}, identities {}",
            corpus.len(),
            if identities_ok { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
