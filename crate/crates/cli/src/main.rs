use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use genuslab_cli::{canonical_json, corpus_run, parse_session, run, to_csv, CorpusConfig, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "genuslab", version, about = "Hilbert coefficients, homological degrees and sectional genera")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Execute a session file and print its reports.
    Run {
        file: PathBuf,
        #[arg(long, env = "GENUSLAB_SEED", default_value_t = 0)]
        seed: u64,
        /// Cap the Hilbert-Samuel table at n <= N.
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// d-sequence search budget.
        #[arg(long, default_value_t = genuslab_cli::run::DEFAULT_BUDGET)]
        budget: usize,
        /// Verify every Groebner basis by S-pair reduction.
        #[arg(long)]
        verify_gb: bool,
        /// Leave timings out of the output.
        #[arg(long)]
        no_timings: bool,
    },
    /// Evaluate the property suite over a corpus and print the aggregate.
    Corpus {
        /// JSON corpus config; the standard grid when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, env = "GENUSLAB_SEED")]
        seed: Option<u64>,
        /// Add the larger example44 cases to the standard grid.
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        no_timings: bool,
    },
    /// Parse and validate a session file and print it in normal form.
    Print { file: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, ExitCode> {
    fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            file,
            seed,
            max_n,
            format,
            budget,
            verify_gb,
            no_timings,
        } => {
            let text = match read(&file) {
                Ok(t) => t,
                Err(c) => return c,
            };
            let session = match parse_session(&text) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            let opts = RunOptions {
                seed,
                max_n,
                budget,
                verify_gb,
                timings: !no_timings,
            };
            let doc = match run(&session, &opts) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            match format {
                Format::Json => print!("{}", canonical_json(&doc)),
                Format::Csv => print!("{}", to_csv(&doc.reports)),
            }
            for r in &doc.reports {
                if let Some(e) = &r.error {
                    eprintln!("command {} ({}): {}: {}", r.command_index, r.instance, e.kind, e.message);
                }
            }
            ExitCode::from(doc.status.exit_code() as u8)
        }
        Command::Corpus {
            config,
            seed,
            slow,
            no_timings,
        } => {
            let mut cfg = match &config {
                Some(p) => {
                    let text = match read(p) {
                        Ok(t) => t,
                        Err(c) => return c,
                    };
                    match CorpusConfig::from_json(&text) {
                        Ok(c) => c,
                        Err(e) => {
                            eprintln!("{}: {e}", p.display());
                            return ExitCode::from(2);
                        }
                    }
                }
                None => CorpusConfig::standard(),
            };
            if slow {
                cfg.example44.extend([(2, 2), (3, 2), (4, 1)]);
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let agg = corpus_run(&cfg, !no_timings);
            print!("{}", canonical_json(&agg));
            ExitCode::from(if agg.all_pass() { 0 } else { 1 })
        }
        Command::Print { file } => {
            let text = match read(&file) {
                Ok(t) => t,
                Err(c) => return c,
            };
            match parse_session(&text) {
                Ok(s) => {
                    print!("{s}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    ExitCode::from(2)
                }
            }
        }
    }
}
