use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use optquad::{
    cmd_coeffs, cmd_integrate, cmd_norm, cmd_oracle_check, cmd_verify, parse_samples, CliError,
    Format, RunConfig, DEFAULT_ORACLE_TOLERANCE,
};

/// Optimal quadrature on [0, 1] with shifted boundary nodes.
#[derive(Parser)]
#[command(name = "optquad", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Problem {
    /// Smoothness order m (at least 2).
    #[arg(long)]
    m: usize,
    /// Grid size; nodes are indexed 0..=N.
    #[arg(short = 'N', long = "N")]
    n: usize,
    /// Boundary offset; repeat for several shifted nodes per end.
    #[arg(long = "eta", default_value = "0")]
    etas: Vec<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Working precision in bits.
    #[arg(long, default_value_t = 256)]
    bits: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Significant digits in printed values.
    #[arg(long, default_value_t = 20)]
    digits: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Nodes, coefficients, root parameters and error norm.
    Coeffs(Problem),
    /// Closed-form and direct squared norms of the error functional.
    Norm {
        #[command(flatten)]
        problem: Problem,
        /// Seminorm of the integrand; adds the resulting error bound.
        #[arg(long)]
        phi_norm: Option<String>,
    },
    /// Applies the formula to samples taken at its nodes.
    Integrate {
        #[command(flatten)]
        problem: Problem,
        /// File with one sample per line; standard input when omitted.
        #[arg(long)]
        samples: Option<PathBuf>,
        #[arg(long)]
        phi_norm: Option<String>,
    },
    /// Recomputes a reference table and compares every entry.
    Verify {
        #[arg(long)]
        table: String,
        #[command(flatten)]
        output: Output,
    },
    /// Compares the closed-form coefficients with the full-system solve.
    OracleCheck {
        #[command(flatten)]
        problem: Problem,
        #[arg(long, default_value = DEFAULT_ORACLE_TOLERANCE)]
        tolerance: String,
    },
}

fn config(p: &Problem) -> RunConfig {
    RunConfig {
        m: p.m,
        n: p.n,
        etas: p.etas.clone(),
        precision_bits: p.output.bits,
        format: p.output.format,
        digits: p.output.digits,
    }
}

fn read_samples(path: Option<&PathBuf>) -> anyhow::Result<Vec<String>> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .with_context(|| format!("reading samples from {}", p.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading samples from standard input")?;
            s
        }
    };
    Ok(parse_samples(&text))
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Coeffs(p) => cmd_coeffs(&config(&p)),
        Command::Norm { problem, phi_norm } => cmd_norm(&config(&problem), phi_norm.as_deref()),
        Command::Integrate {
            problem,
            samples,
            phi_norm,
        } => {
            let samples =
                read_samples(samples.as_ref()).map_err(|e| CliError::Usage(format!("{e:#}")))?;
            cmd_integrate(&config(&problem), &samples, phi_norm.as_deref())
        }
        Command::Verify { table, output } => {
            cmd_verify(&table, output.bits, output.format, output.digits)
        }
        Command::OracleCheck { problem, tolerance } => {
            cmd_oracle_check(&config(&problem), &tolerance)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Mismatch(report)) => {
            print!("{report}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
