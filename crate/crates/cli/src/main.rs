use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use hcpn_core::homotopy::{Cp6Criterion, SearchWindow};
use num_bigint::BigInt;

mod commands;
mod golden;
mod output;
mod verify;

use commands::AcsRequest;
use output::Outcome;

#[derive(Parser, Debug)]
#[command(name = "hcpn", version, about = "Almost complex structures on homotopy complex projective spaces")]
struct Cli {
    /// Emit tables as CSV.
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CriterionArg {
    Published,
    Consistent,
}

impl From<CriterionArg> for Cp6Criterion {
    fn from(c: CriterionArg) -> Self {
        match c {
            CriterionArg::Published => Cp6Criterion::Published,
            CriterionArg::Consistent => Cp6Criterion::Consistent,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether (c_1, ..., c_d) is the Chern vector of a bundle over CP^d.
    Realizable {
        #[arg(long)]
        dim: usize,
        #[arg(required = true, allow_negative_numbers = true)]
        chern: Vec<BigInt>,
    },
    /// Almost complex structures on the homotopy CP^d with parameters m, n (, q).
    Acs {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_negative_numbers = true)]
        m: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<BigInt>,
        /// Search bound |a| <= a_max (CP^6).
        #[arg(long, default_value_t = 200)]
        a_max: i64,
        /// Search bound |c| <= c_max (CP^6).
        #[arg(long, default_value_t = 200)]
        c_max: i64,
        /// CP^6 criterion to cross-check against the direct test.
        #[arg(long, value_enum, default_value = "consistent")]
        criterion: CriterionArg,
    },
    /// Run a verification suite: ktheory, chernvec, cp4, cp5, cp6 or all.
    Verify {
        suite: String,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a table: mod31, pontrjagin-omega or divisor-targets.
    Table {
        name: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 34)]
        m_max: i64,
    },
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Realizable { dim, chern } => commands::cmd_realizable(dim, &chern),
        Command::Acs { dim, m, n, q, a_max, c_max, criterion } => {
            if a_max < 1 || c_max < 0 {
                return Outcome::usage("--a-max must be positive and --c-max non-negative");
            }
            commands::cmd_acs(&AcsRequest {
                dim,
                m,
                n,
                q,
                window: SearchWindow { a_max, c_max },
                criterion: criterion.into(),
            })
        }
        Command::Verify { suite, seed } => verify::cmd_verify(&suite, seed),
        Command::Table { name, dim, m_max } => commands::cmd_table(&name, dim, m_max),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            let out = Outcome::usage(e.kind().to_string());
            print!("{}", out.render(false));
            return ExitCode::from(out.status.exit_code());
        }
    };
    let out = run(cli.command);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.render(cli.csv).as_bytes());
    eprintln!("elapsed_ms: {}", start.elapsed().as_millis());
    ExitCode::from(out.status.exit_code())
}
