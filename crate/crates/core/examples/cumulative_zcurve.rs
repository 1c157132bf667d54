//! Cumulative Z-curve walk: prefix sums of the transformed channels,
//! printed as CSV (n, x, y, z).

use symspec::prelude::*;

fn main() -> symspec::Result<()> {
    let seq = sequence_from_string("ATGGCGTACCTGAGCGGATTAACCGGTTAGCA", &Alphabet::dna())?;
    let sig = apply_representation(&build_indicators(&seq), &build_zcurve())?;
    let walk = cumulative_coordinates(&sig);
    println!("n,x,y,z");
    for n in 0..seq.len() {
        println!("{},{},{},{}", n + 1, walk[0][n], walk[1][n], walk[2][n]);
    }
    Ok(())
}
