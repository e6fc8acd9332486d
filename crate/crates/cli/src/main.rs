use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hv_cli::{parse_config, run, OutputFormat};

/// Run one verification described by a JSON config.
#[derive(Parser, Debug)]
#[command(name = "hvcheck", version)]
struct Args {
    /// Path to the run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output format; overrides the config's `output`.
    #[arg(long, value_enum)]
    out: Option<OutputFormat>,
    /// Permutes sweep order only; results do not depend on it.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match std::fs::read_to_string(&args.config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: config {}: {e}", args.config.display());
            return ExitCode::from(2);
        }
    };
    let report = parse_config(&text).and_then(|cfg| Ok((run(&cfg, args.seed)?, args.out.unwrap_or(cfg.output))));
    match report {
        Ok((r, format)) => {
            print!("{}", r.render(format));
            if r.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {}", single_line(&e.to_string()));
            ExitCode::from(2)
        }
    }
}

fn single_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}
