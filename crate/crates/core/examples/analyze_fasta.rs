//! Analyze a FASTA file (or a built-in record) with the base and Z-curve
//! representations and print the text report.
//!
//!     cargo run --example analyze_fasta -- path/to/genes.fa

use symspec::report::{self, AnalysisConfig, Command, InputSource, RepresentationChoice};

const DEMO: &str = ">demo\nATGGCCATTGTAATGGGCCGCTGAAAGGGTGCCCGATAG\nATGAAAGCGCTGGCGAAACTGATGCCGTAA\n";

fn main() -> symspec::Result<()> {
    let input = match std::env::args().nth(1) {
        Some(path) => InputSource::Path(path.into()),
        None => InputSource::Text {
            label: "demo".into(),
            text: DEMO.into(),
        },
    };
    let config = AnalysisConfig {
        input,
        representations: vec![RepresentationChoice::Base, RepresentationChoice::ZCurve],
        ..AnalysisConfig::default()
    };
    let out = report::run(Command::Analyze, &config)?;
    print!("{}", out.text);
    Ok(())
}
