//! `liebialg` binary.

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use liebialg_cli::args::Cli;
use liebialg_cli::error::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match liebialg_cli::run(&cli).and_then(|report| {
        let json = report.to_json(cli.pretty);
        match &cli.out {
            Some(path) => std::fs::write(path, json + "\n").map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?,
            None => {
                // A closed pipe (e.g. `| head`) is not an error of the run.
                let mut out = std::io::stdout().lock();
                let _ = writeln!(out, "{json}").and_then(|()| out.flush());
            }
        }
        if cli.pretty {
            eprint!("{}", report.table());
        }
        Ok(report.exit_code())
    }) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
