//! `cmfixed`: fixed points of cyclic groups on Calogero–Moser spaces of type G(l,1,n).
//!
//! Exit status: 0 when every check passes, 1 when a verification fails, 2 on a usage
//! error (bad flags or inputs outside the domain of an operation).

mod commands;
mod output;
mod selftest;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser)]
#[command(name = "cmfixed", version, about = "Components, parameters and characters of μ_m-fixed loci in Calogero–Moser spaces of G(l,1,n)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Labelling of fixed points by multipartitions.
    #[arg(long, value_enum, default_value_t = Conv::Gordon, global = true)]
    convention: Conv,
    /// Seed for randomized checks.
    #[arg(long, env = "CM_SEED", default_value_t = 20240601, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Conv {
    Gordon,
    Quiver,
}

impl From<Conv> for cmfixed::fixed_points::Convention {
    fn from(c: Conv) -> Self {
        match c {
            Conv::Gordon => Self::Gordon,
            Conv::Quiver => Self::Quiver,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// l-core of a partition and the number of l-box removals.
    Cores(PartitionArgs),
    /// l-core and l-quotient of a partition.
    Quotient(PartitionArgs),
    /// l-residue vector of a partition.
    Residues(PartitionArgs),
    /// The set E(k,l,n) with the core tuple and r of each element.
    EnumerateE(Kln),
    /// Component catalog of the μ_{kl}-fixed locus for smooth parameters.
    Components {
        #[command(flatten)]
        kln: Kln,
        #[command(flatten)]
        params: Params,
    },
    /// Parameters (a′, k′) of G(kl,1,r) on the component of d.
    Transport {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
        /// Dimension vector on Z/klZ, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[command(flatten)]
        params: Params,
    },
    /// Character table of G(l,1,n).
    Chartable {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
    },
    /// Checks that i_γ^* respects the codimension filtration.
    VerifyFiltration {
        #[command(flatten)]
        kln: Kln,
        /// A single core tuple such as "1|"; all tuples when omitted.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Smoothness predicates for (a, k), or for the G4 surfaces with --g4.
    Smooth(SmoothArgs),
    /// Moment map, fiber membership, immersion and simplicity of a representation.
    QuiverCheck(QuiverArgs),
    /// Runs the built-in invariant suite.
    Selftest,
}

#[derive(Args)]
struct PartitionArgs {
    /// Parts, comma separated; "" or "∅" for the empty partition.
    #[arg(long)]
    partition: String,
    #[arg(long)]
    l: usize,
}

#[derive(Args)]
struct Kln {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct Params {
    /// a as p/q.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// k_0,…,k_{l−1} as p/q, summing to 0; all zero when omitted.
    #[arg(long, allow_hyphen_values = true)]
    kparams: Option<String>,
}

#[derive(Args)]
struct SmoothArgs {
    #[arg(long, required_unless_present = "g4")]
    l: Option<usize>,
    #[arg(long, required_unless_present = "g4")]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "g4")]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    kparams: Option<String>,
    /// Drop the factor a from the gl(1,n) criterion (meaningful at n = 1).
    #[arg(long)]
    drop_a: bool,
    /// k0,k1,k2 for the exceptional group G4.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["l", "n", "a", "kparams", "drop_a"])]
    g4: Option<String>,
}

#[derive(Args)]
struct QuiverArgs {
    /// JSON file with {d, X, Y}, or "-" for stdin.
    #[arg(long)]
    rep: String,
    /// θ on the vertices of the representation, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Also push the representation to Z/lZ through the block immersion.
    #[arg(long)]
    immerse: Option<usize>,
    /// Random trials for the simplicity test.
    #[arg(long, default_value_t = 32)]
    budget: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let conv = cli.convention.into();
    let result = match cli.command {
        Command::Cores(a) => commands::cores(&a.partition, a.l),
        Command::Quotient(a) => commands::quotient(&a.partition, a.l),
        Command::Residues(a) => commands::residues(&a.partition, a.l),
        Command::EnumerateE(x) => commands::enumerate_e(x.k, x.l, x.n),
        Command::Components { kln, params } => commands::components(kln.l, kln.n, kln.k, &params.a, params.kparams.as_deref(), conv),
        Command::Transport { l, k, d, params } => commands::transport(l, k, &d, &params.a, params.kparams.as_deref()),
        Command::Chartable { l, n } => commands::chartable(l, n),
        Command::VerifyFiltration { kln, gamma } => commands::verify_filtration(kln.l, kln.n, kln.k, gamma.as_deref(), conv),
        Command::Smooth(s) => match s.g4 {
            Some(g4) => commands::g4(&g4),
            None => commands::smooth(
                s.l.expect("required"),
                s.n.expect("required"),
                s.a.as_deref().expect("required"),
                s.kparams.as_deref(),
                s.drop_a,
            ),
        },
        Command::QuiverCheck(q) => commands::quiver_check(&q.rep, q.theta.as_deref(), q.immerse, q.budget, cli.seed),
        Command::Selftest => Ok(selftest::run(cli.seed)),
    };
    match result {
        Ok(report) => {
            if let Err(e) = report.emit(cli.format) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if report.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
