//! Helmert representation of a protein sequence: T = 20, so the SNR
//! ratio over the indicator spectrum is 20/19 at every nonzero bin.

use symspec::prelude::*;

fn main() -> symspec::Result<()> {
    let protein = "MKTAYIAKQRQISFVKSHFSRQLEERLGLIEVQAPILSRVGDGTQDNLSGAEKAVQVKVKALPDAQFEVVHSLAKWKRQTLGQHDFSAGEGLYTHMKALRPDEDRLSPLHSVYVDQWDWERVMGDGERQFSTLKSTVEAIWAGIKATEAAVSEEFGLAPFLPDQIHFVHSQELLSRYPDLDAKGRERAIAKDLGAVFLVGIGGKLSDGHRHDVRAPDYDDWSTPSELGHAGLNGDILVWNPVLEDAFELSSMGIRVDADTLKHQLALTGDEDRLELEWHQALLRGEMPQTIGGGIGQSRLTMLLLQLPHIGQVQAGVWPAACRESVPALL";
    let seq = sequence_from_string(protein, &Alphabet::protein())?;
    let ind = build_indicators(&seq);
    let helmert = build_helmert(seq.alphabet());
    println!(
        "m = {}, T = {}, Helmert is {}x{}",
        seq.len(),
        seq.alphabet().len(),
        helmert.channel_count(),
        helmert.symbol_count()
    );

    let check = snr_ratio_check(&ind, &helmert)?;
    println!(
        "expected ratio {:.6}, {} bins evaluated, {} skipped, max rel. deviation {:.2e}",
        check.expected,
        check.evaluated,
        check.skipped,
        check.max_relative_deviation().unwrap_or(0.0)
    );
    Ok(())
}
