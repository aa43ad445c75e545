use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use ffctl::{execute, CliError, Command, OrderName, Output, Overrides};

/// F-purity and Frobenius ideal computations over prime fields.
#[derive(Debug, Parser)]
#[command(name = "ffctl", version)]
struct Args {
    command: Command,
    /// Job file with `key = value` lines.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum)]
    order: Option<OrderName>,
    #[arg(long)]
    cap: Option<u32>,
    /// Cap on the Buchberger pair queue.
    #[arg(long, env = "FFCTL_MAX_PAIRS")]
    max_pairs: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let over = Overrides {
        command: Some(args.command),
        order: args.order,
        cap: args.cap,
        samples: args.samples,
        max_pairs: args.max_pairs,
        output: args.json.then_some(Output::Json),
    };
    let result = std::fs::read_to_string(&args.input)
        .map_err(|source| CliError::Io {
            path: args.input.display().to_string(),
            source,
        })
        .and_then(|text| execute(&text, &over));
    match result {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ffctl: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
