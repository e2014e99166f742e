//! Command-line front end for `liebialg`: catalog access, verification
//! campaigns over the bundled fixtures, custom algebra files and versioned
//! JSON reports.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod reference;
pub mod report;

use std::time::Instant;

use args::{Cli, Command};
use commands::{Options, VerifySelection};
use error::CliError;
use report::Report;

/// Runs a parsed command line and returns its report with timing filled in.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let opts = Options {
        params: input::params_flag(cli.params.as_deref())?,
        grid_radius: cli.grid_radius,
        cofactor_degree: cli.cofactor_degree,
        float_tol: cli.float_tol,
    };
    if opts.grid_radius < 0 {
        return Err(CliError::BadFlag {
            flag: "--grid-radius",
            message: "must be nonnegative".into(),
        });
    }
    if opts.float_tol.is_nan() || opts.float_tol <= 0.0 {
        return Err(CliError::BadFlag {
            flag: "--float-tol",
            message: "must be positive".into(),
        });
    }
    let mut report = match &cli.command {
        Command::Catalog { name } => commands::catalog_cmd(name.as_deref(), &opts),
        Command::Verify {
            target,
            tables,
            killing,
            invariants,
            ybe,
            bricks,
            trees,
            derivations,
        } => {
            let sel = VerifySelection {
                tables: *tables,
                killing: *killing,
                invariants: *invariants,
                ybe: *ybe,
                bricks: *bricks,
                trees: *trees,
                derivations: *derivations,
            };
            commands::verify(target, sel, &opts)
        }
        Command::Ybe { target, point } => commands::ybe(target, point.as_deref(), &opts),
        Command::Bricks { target } => commands::bricks(target, &opts),
        Command::Rep { target, alphas } => commands::rep(target, alphas.as_deref(), &opts),
        Command::OrbitDim { target, point } => commands::orbit_dim(target, point, &opts),
        Command::DarbouxTree { target } => commands::darboux_tree(target.as_deref(), &opts),
    }?;
    report.timing.total_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}
