use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

use etale_atlas::cli::{execute, CliCommand, RunConfig};

/// Exact classification of étale and Lagrangian algebras in Drinfeld
/// centers of finite gauge theories.
#[derive(Parser)]
#[command(name = "etale-atlas", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute H^n(G; Q/Z) with generator cocycles
    Cohomology {
        #[command(flatten)]
        common: Common,
        /// cohomological degree (1..=5)
        #[arg(long)]
        degree: usize,
    },
    /// Lagrangian algebras in Z1(Vect^w_G): gapped boundaries
    Lagrangian1 {
        #[command(flatten)]
        common: Common,
        /// 3-cocycle file (omitted: untwisted)
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// Connected étale algebras in Z1(Vect^w_G) over all pairs N ⊴ H
    Etale1 {
        #[command(flatten)]
        common: Common,
        /// 3-cocycle file (omitted: untwisted)
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// Pointed-sector Lagrangian algebras in Z1(2Vect^pi_G), A = Vect
    Lagrangian2 {
        #[command(flatten)]
        common: Common,
        /// 4-cocycle file (omitted: untwisted)
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// Connected étale algebras in 2Rep(G) over pointed candidates
    Etale2rep {
        #[command(flatten)]
        common: Common,
        /// metric-group file (repeatable)
        #[arg(long = "metric", required = true)]
        metrics: Vec<PathBuf>,
    },
    /// Skeleta of connected étale algebras in Z1(2Vect^pi_G)
    Etale2 {
        #[command(flatten)]
        common: Common,
        /// 4-cocycle file (omitted: untwisted)
        #[arg(long)]
        cocycle: Option<PathBuf>,
        /// metric-group file for A
        #[arg(long)]
        metric: PathBuf,
    },
    /// Conjugacy-class sector decomposition of the Drinfeld center
    Center {
        #[command(flatten)]
        common: Common,
        /// twist degree: 3 for Z1(Vect^w_G), 4 for Z1(2Vect^pi_G)
        #[arg(long)]
        degree: usize,
        /// cocycle file of matching degree (omitted: untwisted)
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// Transgressed twist tau_g of a 3- or 4-cocycle at one element
    Transgress {
        #[command(flatten)]
        common: Common,
        /// cocycle file (degree 3 or 4)
        #[arg(long)]
        cocycle: PathBuf,
        /// group element index
        #[arg(long)]
        element: usize,
    },
}

#[derive(clap::Args)]
struct Common {
    /// group file (Cayley table or permutation generators)
    #[arg(long)]
    group: PathBuf,
    /// write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// print progress to stderr
    #[arg(short, long, action = ArgAction::Count)]
    verbose: u8,
}

fn to_config(cmd: Command) -> RunConfig {
    let (command, common, cocycle, metrics) = match cmd {
        Command::Cohomology { common, degree } => {
            (CliCommand::Cohomology { degree }, common, None, vec![])
        }
        Command::Lagrangian1 { common, cocycle } => {
            (CliCommand::Lagrangian1, common, cocycle, vec![])
        }
        Command::Etale1 { common, cocycle } => (CliCommand::Etale1, common, cocycle, vec![]),
        Command::Lagrangian2 { common, cocycle } => {
            (CliCommand::Lagrangian2, common, cocycle, vec![])
        }
        Command::Etale2rep { common, metrics } => {
            (CliCommand::Etale2Rep, common, None, metrics)
        }
        Command::Etale2 { common, cocycle, metric } => {
            (CliCommand::Etale2, common, cocycle, vec![metric])
        }
        Command::Center { common, degree, cocycle } => {
            (CliCommand::Center { degree }, common, cocycle, vec![])
        }
        Command::Transgress { common, cocycle, element } => {
            (CliCommand::Transgress { element }, common, Some(cocycle), vec![])
        }
    };
    RunConfig {
        command,
        group_path: common.group,
        cocycle_path: cocycle,
        metric_paths: metrics,
        output: common.output,
        verbosity: common.verbose,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(execute(&to_config(cli.command)))
}
