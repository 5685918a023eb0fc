//! `kalvar`: constructions, membership checks, Gröbner certificates and
//! degree computations for Kalman varieties.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "kalvar", version, about = "Exact computations on Kalman varieties K_{s,d,n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// The stratum K_{s,d,n}: matrices with an invariant subspace of dimension
/// at least s inside span(e_1..e_d) of K^n.
#[derive(Args, Debug, Clone, Copy)]
pub struct StratumArgs {
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// the stack C, CA, ..., CA^d
    Full,
    /// lower-left blocks of A, A^2, ..., A^d
    Small,
    /// A21 A11^k for k < d
    Reduced,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    All,
    Schur,
    Binomial,
    Univariate,
    Koutschan,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a Kalman matrix, symbolic in the entries a_ij or evaluated at a matrix from JSON
    Matrix {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "full")]
        kind: MatrixKind,
        /// matrix JSON to evaluate at (`-` for stdin)
        #[arg(long)]
        file: Option<String>,
        /// prime modulus for symbolic output; rationals if omitted
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Nonzero minors generating the stratum ideal, with their degree census
    Generators {
        #[command(flatten)]
        stratum: StratumArgs,
        #[arg(long, value_enum, default_value = "reduced")]
        source: MatrixKind,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Complete the minor generators to a reduced lex Groebner basis
    Complete {
        #[command(flatten)]
        stratum: StratumArgs,
        #[arg(long, value_enum, default_value = "reduced")]
        source: MatrixKind,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 50_000)]
        max_pairs: usize,
        #[arg(long, default_value_t = 30)]
        max_degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Decide membership of a matrix read from JSON with both rank criteria
    Member {
        #[command(flatten)]
        stratum: StratumArgs,
        /// matrix JSON (`-` for stdin)
        #[arg(long)]
        file: String,
        /// also enumerate invariant subspaces (finite fields only)
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        json: bool,
    },
    /// Emit a seeded random member of the stratum as matrix JSON
    Witness {
        #[command(flatten)]
        stratum: StratumArgs,
        #[arg(long)]
        seed: u64,
        /// prime modulus; rationals if omitted
        #[arg(long)]
        p: Option<u64>,
    },
    /// Degree of the stratum by one or all applicable methods
    Degree {
        #[command(flatten)]
        stratum: StratumArgs,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        /// also print the Schur expansion of the Chern-root series
        #[arg(long)]
        expansion: bool,
        #[arg(long)]
        json: bool,
    },
    /// Degrees of every stratum with n <= nmax, checked across methods
    GridDegree {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert function table of the d = 2 Kalman variety with its closed forms
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_t: u32,
        #[arg(long)]
        json: bool,
    },
    /// Certify the explicit d = 2 Groebner basis, its facets and Hilbert series
    Gbcheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_t: u32,
        #[arg(long)]
        json: bool,
    },
    /// Multidegree of the eigenvector incidence before and after t1 -> t1 + t2
    Multidegree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Matrix {
            d,
            n,
            kind,
            file,
            p,
            json,
        } => commands::matrix(d, n, kind, file.as_deref(), p, json),
        Command::Generators {
            stratum,
            source,
            p,
            json,
        } => commands::generators(stratum, source, p, json),
        Command::Complete {
            stratum,
            source,
            p,
            max_pairs,
            max_degree,
            json,
        } => commands::complete(stratum, source, p, max_pairs, max_degree, json),
        Command::Member {
            stratum,
            file,
            brute,
            json,
        } => commands::member(stratum, &file, brute, json),
        Command::Witness { stratum, seed, p } => commands::witness(stratum, seed, p),
        Command::Degree {
            stratum,
            method,
            expansion,
            json,
        } => commands::degree(stratum, method, expansion, json),
        Command::GridDegree { nmax, json } => commands::grid_degree(nmax, json),
        Command::Hilbert { n, max_t, json } => commands::hilbert(n, max_t, json),
        Command::Gbcheck { n, max_t, json } => commands::gbcheck(n, max_t, json),
        Command::Multidegree { n, json } => commands::multidegree(n, json),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("kalvar: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
