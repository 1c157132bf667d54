use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use symspec::alphabet::Alphabet;
use symspec::report::{self, AnalysisConfig, Command, InputSource, OutputFormat, RepresentationChoice};
use symspec::sequence::AlphabetPolicy;

/// Fourier power spectra and SNR of symbolic sequences.
#[derive(Parser)]
#[command(name = "symspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Spectrum summary, period peak and identity checks per representation.
    Analyze(Common),
    /// Side-by-side table of two or more representations.
    Compare(Common),
    /// Check total-spectrum and SNR-ratio identities.
    Verify(Common),
    /// CSV of k, frequency, power and SNR for one representation.
    Spectrum(Common),
}

#[derive(Args)]
struct Common {
    /// FASTA or plain-text input; `-` reads stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Alphabet symbols in column order, or `auto` to infer a sorted alphabet.
    #[arg(long, default_value = "ACGT")]
    alphabet: String,
    /// Treat the whole input as one headerless sequence.
    #[arg(long)]
    plain: bool,
    /// base | zcurve | tetrahedron | helmert | file:PATH (repeatable).
    #[arg(long = "rep")]
    reps: Vec<String>,
    #[arg(long, default_value_t = report::DEFAULT_PERIOD)]
    period: usize,
    /// text | json | csv
    #[arg(long, default_value = "text")]
    format: String,
    /// Output file; `-` writes stdout.
    #[arg(long, default_value = "-")]
    output: String,
    /// Generate N random sequences instead of reading input.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Alphabet size for --random (4 = ACGT, 20 = amino acids).
    #[arg(long, default_value_t = 4)]
    alphabet_size: usize,
}

fn build_config(command: Command, args: &Common) -> symspec::Result<AnalysisConfig> {
    let input = match args.random {
        Some(count) => InputSource::Random {
            count,
            alphabet_size: args.alphabet_size,
            seed: args.seed,
        },
        None if args.input == "-" => InputSource::Stdin,
        None => InputSource::Path(PathBuf::from(&args.input)),
    };
    let alphabet = match args.alphabet.as_str() {
        "auto" => AlphabetPolicy::Infer,
        s => AlphabetPolicy::Explicit(s.parse::<Alphabet>()?),
    };
    let mut representations = args
        .reps
        .iter()
        .map(|r| r.parse())
        .collect::<symspec::Result<Vec<RepresentationChoice>>>()?;
    if representations.is_empty() {
        representations = match command {
            Command::Analyze | Command::Spectrum => vec![RepresentationChoice::Base],
            Command::Compare => vec![RepresentationChoice::Base, RepresentationChoice::ZCurve],
            Command::Verify => Vec::new(),
        };
    }
    Ok(AnalysisConfig {
        input,
        alphabet,
        plain: args.plain,
        representations,
        period: args.period,
        format: args.format.parse::<OutputFormat>()?,
    })
}

fn write_output(target: &str, text: &str) -> std::io::Result<()> {
    if target == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()
    } else {
        std::fs::write(target, text)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match &cli.command {
        Cmd::Analyze(a) => (Command::Analyze, a),
        Cmd::Compare(a) => (Command::Compare, a),
        Cmd::Verify(a) => (Command::Verify, a),
        Cmd::Spectrum(a) => (Command::Spectrum, a),
    };
    let result = build_config(command, args).and_then(|config| report::run(command, &config));
    match result {
        Ok(output) => {
            if let Err(e) = write_output(&args.output, &output.text) {
                eprintln!("symspec: {}: {e}", args.output);
                return ExitCode::FAILURE;
            }
            if output.success {
                ExitCode::SUCCESS
            } else {
                eprintln!("symspec: identity check failed");
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("symspec: {e}");
            ExitCode::FAILURE
        }
    }
}
