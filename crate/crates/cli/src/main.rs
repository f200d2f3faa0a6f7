//! `skewspec` command-line tool.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skewspec::maxenergy::DEFAULT_SIZE_LIMIT;
use skewspec::spectra::DEFAULT_TOL;
use skewspec::Error;

/// Oriented graph products, skew spectra and maximum skew energy.
#[derive(Debug, Parser)]
#[command(name = "skewspec", version)]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Tolerance for spectrum comparisons.
    #[arg(long = "tol", global = true, default_value_t = DEFAULT_TOL, value_parser = positive_f64)]
    pub tolerance: f64,

    /// Largest graph order any command will construct.
    #[arg(long = "limit", global = true, env = "SKEWSPEC_LIMIT", default_value_t = DEFAULT_SIZE_LIMIT)]
    pub size_limit: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    /// Read graph files as undirected edge lists (default orientation min → max).
    #[arg(long, global = true)]
    pub undirected: bool,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("tolerance must be positive".into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Kron,
    Strong,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the skew spectrum, energy and max-energy certificate of a graph.
    Spectrum {
        /// Graph file or seed name (p2, c4, k4, k44, q<d>).
        input: String,
    },
    /// Build an oriented product of a bipartite H with G.
    Product {
        h: String,
        g: String,
        /// cartesian, kronecker, strong or lex.
        #[arg(long)]
        kind: String,
        /// Oriented complete graph for the lexicographic product.
        #[arg(long)]
        kn: Option<String>,
        /// Where to write the product graph ("-" for stdout).
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Compare predicted and computed spectra of a Kronecker or strong product.
    Verify {
        h: Option<String>,
        g: Option<String>,
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Use random instances instead of files.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Perturb the prediction; the comparison must then fail.
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Build a member of an iterated maximum-energy family.
    Family {
        /// cartesian_c4k4, kron_c4_iter, kron_k4_iter, strong_c4_iter or lex_p2.
        #[arg(long)]
        name: String,
        #[arg(long)]
        r: u32,
        /// Also write the graph here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all orientations of a regular graph with maximum skew energy.
    Search {
        /// Graph file (edges) or seed name.
        input: String,
        /// Print the energy histogram over all orientations instead.
        #[arg(long)]
        histogram: bool,
    },
    /// Write a graph (or seed) as text, JSON, or its skew-adjacency matrix as CSV.
    Export { input: String },
}

/// Failure classes mapped onto process exit codes.
#[derive(Debug)]
pub enum Failure {
    /// A check ran and did not pass.
    Verification(String),
    Input(String),
    SizeLimit(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 2,
            Failure::SizeLimit(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Input(m) | Failure::SizeLimit(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::SizeLimit { .. } | Error::Overflow => Failure::SizeLimit(msg),
            Error::CertificateFailed(_) | Error::NonConvergence { .. } => {
                Failure::Verification(msg)
            }
            _ => Failure::Input(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = &cli.config;
    let result = match cli.command {
        Command::Spectrum { input } => commands::spectrum(cfg, &input),
        Command::Product {
            h,
            g,
            kind,
            kn,
            out,
        } => commands::product(cfg, &h, &g, &kind, kn.as_deref(), &out),
        Command::Verify {
            h,
            g,
            theorem,
            random,
            seed,
            m,
            n,
            trials,
            corrupt,
        } => {
            let source = if random {
                commands::VerifySource::Random { seed, m, n, trials }
            } else {
                match (h, g) {
                    (Some(h), Some(g)) => commands::VerifySource::Files { h, g },
                    _ => {
                        eprintln!("error: verify needs H and G inputs or --random");
                        return ExitCode::from(2);
                    }
                }
            };
            commands::verify(cfg, source, theorem, corrupt)
        }
        Command::Family { name, r, out } => commands::family(cfg, &name, r, out.as_deref()),
        Command::Search { input, histogram } => commands::search(cfg, &input, histogram),
        Command::Export { input } => commands::export(cfg, &input),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
