use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mideal::harness::{run_suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "mideal", version, about = "Verify multiplier-ideal identities on monomial corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        /// subadditivity | summation | skoda | symbolic | asymptotic | tau-vs-j | paper-example | all
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// `poly` or a declaration such as `A2n n=2`.
        #[arg(long)]
        ring: Option<String>,
        /// Parameter of the A_{2n} example.
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    let Command::Verify {
        suite,
        seed,
        count,
        ring,
        n,
        out,
        format,
    } = cli.command;
    let cfg = SuiteConfig { seed, count, ring, n };
    let report = match run_suite(&suite, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("usage: mideal verify <suite> [--seed S] [--count N] [--ring R] [--n N] [--out FILE] [--format json|text]");
            return ExitCode::from(1);
        }
    };
    let body = match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
            eprint!("{}", report.to_text().lines().last().map(|l| format!("{l}\n")).unwrap_or_default());
        }
        None => print!("{body}"),
    }
    ExitCode::from(if report.has_failures() { 2 } else { 0 })
}
