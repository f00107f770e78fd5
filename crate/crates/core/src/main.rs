use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use hdiff::suites::{run_suite, Suite, SuiteParams};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Runs a verification suite and prints its report.
#[derive(Debug, Parser)]
#[command(name = "hdiff", version)]
struct Args {
    /// Number of sites.
    #[arg(long, default_value_t = 2)]
    n: usize,

    /// Number of copies of the generators.
    #[arg(long = "N", default_value_t = 1)]
    copies: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Maximum word length or degree for sampled elements.
    #[arg(long, default_value_t = 3)]
    degree: usize,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// One of: dybe, consistency, center, core-lemmas, zhelobenko, epsilon,
    /// sn, weyl, iso, reflection, hw, vmod, note3, ore.
    #[arg(long)]
    suite: Suite,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let params = SuiteParams {
        n: args.n,
        copies: args.copies,
        seed: args.seed,
        degree: args.degree,
    };
    let report = match run_suite(args.suite, params) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match args.format {
        Format::Text => print!("{report}"),
        Format::Json => match serde_json::to_string_pretty(&report) {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        eprintln!("{}: some checks failed", report.suite);
        ExitCode::FAILURE
    }
}
