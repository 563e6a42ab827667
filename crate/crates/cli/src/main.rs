//! `classgraph`: verify the K_{2,5} family, dump class tables, export divisor graphs.
//!
//! Exit status: 0 success, 1 failed check or enumeration limit, 2 invalid input.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "classgraph", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
pub struct Limits {
    /// Allow enumeration for p above the default limit (see BDG_MAX_P).
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the presentation, the dihedral action, the class sizes and B(G) for one p.
    Verify {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: Limits,
    },
    /// Print the conjugacy classes of G(p).
    Classes {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: Limits,
    },
    /// Build the bipartite divisor graph of a size list, of G(p), or of a table group.
    #[command(group(ArgGroup::new("source").required(true).args(["sizes", "p", "table"])))]
    Graph {
        /// Comma-separated positive integers.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<u64>>,
        #[arg(long)]
        p: Option<u32>,
        /// Multiplication-table file.
        #[arg(long)]
        table: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: Limits,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { p, format, limits } => commands::verify(p, format, &limits),
        Command::Classes { p, format, limits } => commands::classes(p, format, &limits),
        Command::Graph {
            sizes,
            p,
            table,
            format,
            limits,
        } => {
            let source = match (sizes, p, table) {
                (Some(s), None, None) => commands::GraphInput::Sizes(s),
                (None, Some(p), None) => commands::GraphInput::Family(p),
                (None, None, Some(t)) => commands::GraphInput::Table(t),
                _ => unreachable!("clap enforces exactly one source"),
            };
            commands::graph(source, format, &limits)
        }
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status)
        }
    }
}
