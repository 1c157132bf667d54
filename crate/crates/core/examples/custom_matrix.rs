//! Load a user-supplied matrix from JSON, validate it and use it.
//! A malformed matrix is rejected with the failing property.

use symspec::prelude::*;

const GOOD: &str = r#"{
  "name": "purine-amino-weak",
  "alphabet_order": ["A", "G", "C", "T"],
  "rows": [[1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
}"#;

const BAD: &str = r#"{
  "name": "skewed",
  "alphabet_order": ["A", "C", "G", "T"],
  "rows": [[1, 1, -1, -1], [1, 0, 0, -1], [0, 1, -1, 0]]
}"#;

fn main() -> symspec::Result<()> {
    let rep = RepresentationMatrix::from_json(GOOD)?;
    println!("loaded '{}' with d = {}", rep.name(), rep.row_norm());

    let seq = sequence_from_string("ATGAAACGCATTAGCACCACCATTACCACCACCATC", &Alphabet::dna())?;
    let ind = build_indicators(&seq);
    let check = snr_ratio_check(&ind, &rep)?;
    println!("ratio check: {} ({} bins)", if check.passes() { "pass" } else { "fail" }, check.evaluated);

    match RepresentationMatrix::from_json(BAD) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
