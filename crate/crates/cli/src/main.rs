//! `scarf`: command-line front end for the neighborly-complex library.
//!
//! Exit status: 0 on success, 1 when a checked property fails, 2 on input
//! errors (unreadable file, malformed JSON, bad flag value).

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use scarf_core::ScaleGuards;

#[derive(Parser, Debug)]
#[command(name = "scarf", version, about = "Exact neighborly complexes, staircase surfaces and Scarf resolutions")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Write the primary result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for the parallel passes (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Limit on the number of input points.
    #[arg(long, global = true)]
    pub guard_points: Option<usize>,
    /// Limit on the ambient dimension.
    #[arg(long, global = true)]
    pub guard_dim: Option<usize>,
    /// Limit on the size of the lcm lattice.
    #[arg(long, global = true)]
    pub guard_lattice: Option<usize>,
}

impl GlobalArgs {
    fn guards(&self) -> ScaleGuards {
        let mut g = ScaleGuards::from_env();
        if let Some(v) = self.guard_points {
            g.max_points = v;
        }
        if let Some(v) = self.guard_dim {
            g.max_dim = v;
        }
        if let Some(v) = self.guard_lattice {
            g.max_lattice = v;
        }
        g
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report whether a point set is an antichain and generic.
    Check(commands::CheckArgs),
    /// Enumerate the neighborly complex and print its facets.
    Complex(commands::ComplexArgs),
    /// Realize the barycentric subdivision on the staircase surface.
    Subdivide(commands::SubdivideArgs),
    /// Query the staircase region and its boundary.
    Surface(commands::SurfaceArgs),
    /// Homology of the complex, its lcm lattice and the crosscut identity.
    Topology(commands::TopologyArgs),
    /// Slack-vector augmentation, bonnet sweep and line coverage.
    Slack(commands::SlackArgs),
    /// Scarf chain complex and Betti numbers of a monomial ideal.
    Ideal(commands::IdealArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = commands::Context { output: cli.global.output.clone(), guards: cli.global.guards() };
    let result = match cli.command {
        Command::Check(a) => commands::check(&ctx, &a),
        Command::Complex(a) => commands::complex(&ctx, &a),
        Command::Subdivide(a) => commands::subdivide(&ctx, &a),
        Command::Surface(a) => commands::surface(&ctx, &a),
        Command::Topology(a) => commands::topology(&ctx, &a),
        Command::Slack(a) => commands::slack(&ctx, &a),
        Command::Ideal(a) => commands::ideal(&ctx, &a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.code())
        }
    }
}
