//! Command-line arguments.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Exact verification of low-dimensional Lie bialgebra data.
#[derive(Debug, Parser)]
#[command(name = "liebialg", version, about)]
pub struct Cli {
    /// Subcommand.
    #[command(subcommand)]
    pub command: Command,
    /// Parameters of a parametric family, e.g. `alpha=1/2,beta=-1/2`.
    #[arg(long, global = true)]
    pub params: Option<String>,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Half-width of the integer grid used to sample Darboux-tree loci.
    #[arg(long, global = true, default_value_t = 3)]
    pub grid_radius: i64,
    /// Degree bound on Darboux cofactors.
    #[arg(long, global = true, default_value_t = 1)]
    pub cofactor_degree: u32,
    /// Tolerance of floating-point automorphism checks.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub float_tol: f64,
    /// Pretty-print the JSON and add a human-readable table on stderr.
    #[arg(long, global = true)]
    pub pretty: bool,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog algebras, or describe one.
    Catalog {
        /// Catalog name.
        name: Option<String>,
    },
    /// Run verification checks on a catalog algebra or an algebra file.
    /// Without group flags every group runs.
    Verify {
        /// Catalog name or path to a JSON algebra file.
        target: String,
        /// Classification rows.
        #[arg(long)]
        tables: bool,
        /// Killing form and its extensions to the exterior powers.
        #[arg(long)]
        killing: bool,
        /// Invariant multivectors.
        #[arg(long)]
        invariants: bool,
        /// mCYBE and CYBE polynomial systems.
        #[arg(long)]
        ybe: bool,
        /// Linear Darboux polynomials.
        #[arg(long)]
        bricks: bool,
        /// Darboux-tree fixtures.
        #[arg(long)]
        trees: bool,
        /// Exponentials of derivations.
        #[arg(long)]
        derivations: bool,
    },
    /// mCYBE and CYBE systems, optionally checked at a bivector.
    Ybe {
        /// Catalog name or path to a JSON algebra file.
        target: String,
        /// Bivector coordinates in the basis e12, e13, ..., comma separated.
        #[arg(long)]
        point: Option<String>,
    },
    /// Linear Darboux polynomials of the fundamental vector fields.
    Bricks {
        /// Catalog name or path to a JSON algebra file.
        target: String,
    },
    /// Faithful representation obtained by adjoining a weight element.
    Rep {
        /// Catalog name or path to a JSON algebra file.
        target: String,
        /// Weights of the basis vectors, comma separated; found automatically if omitted.
        #[arg(long)]
        alphas: Option<String>,
    },
    /// Orbit dimensions at a bivector.
    OrbitDim {
        /// Catalog name or path to a JSON algebra file.
        target: String,
        /// Bivector coordinates in the basis e12, e13, ..., comma separated.
        #[arg(long)]
        point: String,
    },
    /// Verify Darboux-tree fixtures of one algebra, or of all when omitted.
    DarbouxTree {
        /// Catalog name.
        target: Option<String>,
    },
}
