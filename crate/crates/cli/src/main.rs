use std::process::ExitCode;

use clap::Parser;
use pmi_cli::{run, with_threads, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = with_threads(cli.threads, || run(&cli, &mut std::io::stdout().lock()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pmi: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
