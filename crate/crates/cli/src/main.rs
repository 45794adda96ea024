use clap::{Parser, Subcommand};

use curvenbhd_cli::{
    render_human, run_check, run_gamma, run_graph, run_oracle, run_zd, EXIT_USAGE,
};

/// Curve neighborhoods of Schubert varieties in affine flag manifolds of
/// type A, with an exhaustive moment-graph search for verification.
#[derive(Parser)]
#[command(name = "curvenbhd", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form curve neighborhood of a start element at a degree.
    Gamma {
        /// Rank parameter (number of affine simple roots), at least 3.
        #[arg(long)]
        n: usize,
        /// Degree as comma-separated entries d0,d1,...,dn-1.
        #[arg(long)]
        degree: String,
        /// Start element, as a word like `s0 s1` or a window like `[2,1,3]`;
        /// defaults to the identity.
        #[arg(long)]
        start: Option<String>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Re-derive the neighborhood with the search oracle and compare.
        #[arg(long)]
        check_oracle: bool,
        /// Worker threads for the oracle.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// The unique neighborhood element z_d for a degree with a zero entry.
    Zd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: String,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive moment-graph search for the curve neighborhood.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: String,
        #[arg(long)]
        start: Option<String>,
        /// Restrict edge labels to roots below c.
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Export a bounded slice of the moment graph as Graphviz DOT.
    Graph {
        #[arg(long)]
        n: usize,
        /// Budget as comma-separated entries.
        #[arg(long)]
        budget: String,
        /// Output DOT file path.
        #[arg(long)]
        dot: String,
    },
    /// Sweep all degrees up to an entry sum, comparing formula and oracle.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree_sum: i64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders --help/--version through the error path too
            let is_help = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = err.print();
            std::process::exit(if is_help { 0 } else { EXIT_USAGE });
        }
    };

    let (outcome, json) = match &cli.command {
        Command::Gamma {
            n,
            degree,
            start,
            json,
            check_oracle,
            threads,
        } => (
            run_gamma(*n, degree, start.as_deref(), *check_oracle, *threads),
            *json,
        ),
        Command::Zd { n, degree, json } => (run_zd(*n, degree), *json),
        Command::Oracle {
            n,
            degree,
            start,
            fast,
            json,
            threads,
        } => (
            run_oracle(*n, degree, start.as_deref(), *fast, *threads),
            *json,
        ),
        Command::Graph { n, budget, dot } => (run_graph(*n, budget, dot), false),
        Command::Check {
            n,
            max_degree_sum,
            json,
            threads,
        } => (run_check(*n, *max_degree_sum, *threads), *json),
    };

    match outcome {
        Ok(report) => {
            let text = if json {
                format!("{}\n", report.to_json())
            } else {
                render_human(&report)
            };
            write_stdout(&text);
            std::process::exit(report.exit_code());
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code);
        }
    }
}

/// Write without panicking when the reader closes the pipe early.
fn write_stdout(text: &str) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let _ = lock.write_all(text.as_bytes());
    let _ = lock.flush();
}
