//! The tetrahedron and Z-curve matrices differ in scale and column order
//! but give identical SNR at every bin.

use symspec::prelude::*;

fn main() -> symspec::Result<()> {
    let seq = sequence_from_string("ATGCGTACGTTAGCATGCCGATAGGCTAACGT", &Alphabet::dna())?;
    let ind = build_indicators(&seq);
    let tet = build_tetrahedron();
    let z = build_zcurve();
    println!("tetrahedron columns {:?}, d = {:.6}", tet.alphabet_order(), tet.row_norm());
    println!("zcurve      columns {:?}, d = {:.6}", z.alphabet_order(), z.row_norm());

    let st = spectrum_transformed(&apply_representation(&ind, &tet)?);
    let sz = spectrum_transformed(&apply_representation(&ind, &z)?);
    let worst = st
        .snr()
        .iter()
        .zip(sz.snr())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("totals {:.3} vs {:.3}", st.total(), sz.total());
    println!("max |SNR difference| over {} bins: {worst:.2e}", st.snr().len());
    Ok(())
}
