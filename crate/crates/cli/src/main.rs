//! `prsk`: enumerate p-Young tableaux, map tableau pairs to group elements
//! and back, and run the verification suites.

mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use prsk_core::verify::Suite;

use commands::{Ctx, VerifyOpts};
use output::{Format, Output};

#[derive(Parser)]
#[command(name = "prsk", version, about = "Robinson-Schensted correspondence for Z_{p^r} x| Z*_{p^r}")]
struct Cli {
    /// Odd prime.
    #[arg(long, global = true, default_value_t = 3)]
    p: u64,
    #[arg(long, global = true, default_value_t = 2)]
    r: u32,
    /// Work in SG_r (family W) instead of G_r.
    #[arg(long, global = true)]
    subgroup: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Total degree cap for truncated polynomials.
    #[arg(long, global = true, default_value_t = 12)]
    cap: u64,
    /// Number of x (and y) variables.
    #[arg(long, global = true, default_value_t = 2)]
    vars: usize,
    /// Seed for sampled suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List levels, shapes, dimensions and l-indices.
    Levels,
    /// All standard p-Young tableaux of lambda(level size, kprime).
    Tableaux {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        kprime: u64,
    },
    /// Image of tableau pairs given as FAMILY,s,kprime:i,j.
    Map {
        #[arg(long, required = true)]
        pair: Vec<String>,
    },
    /// Tableau pairs of group elements such as g^8*tau^9.
    Unmap {
        #[arg(required = true)]
        element: Vec<String>,
    },
    /// Matrix of images h(P_i, P_j) for one shape, or every shape of the level.
    Matrices {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        kprime: Option<u64>,
    },
    /// Run a verification suite; exit code 1 on a counterexample.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Level index: relation levels for matrix-units, top s for kostka.
        #[arg(long)]
        s: Option<u32>,
        /// Largest block count for merging.
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        /// Random elements for roundtrip instead of a full sweep.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// p-Schur function of a shape (the first shape of the level by default).
    Schur {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        kprime: Option<u64>,
    },
    /// Both sides of the truncated Cauchy identity.
    Cauchy,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: prsk_core::Error| e.to_string())
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("PRSK_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("PRSK_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("PRSK_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn emit(out: &Output, format: Format) -> ExitCode {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match out.write(format, &mut lock).and_then(|_| lock.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let ctx = Ctx { p: cli.p, r: cli.r, subgroup: cli.subgroup, vars: cli.vars, cap: cli.cap, seed: cli.seed };
    let result = match cli.command {
        Command::Levels => commands::levels(&ctx).map(|o| (o, true)),
        Command::Tableaux { s, kprime } => commands::tableaux(&ctx, s, kprime).map(|o| (o, true)),
        Command::Map { pair } => commands::map(&ctx, &pair).map(|o| (o, true)),
        Command::Unmap { element } => commands::unmap(&ctx, &element).map(|o| (o, true)),
        Command::Matrices { s, kprime } => commands::matrices(&ctx, s, kprime).map(|o| (o, true)),
        Command::Verify { suite, s, kmax, samples } => {
            commands::run_suite(&ctx, &VerifyOpts { suite, s, k_max: kmax, samples }).map(|rep| {
                if let Some(c) = &rep.counterexample {
                    eprintln!("counterexample: {c}");
                }
                (commands::report_output(&rep), rep.passed)
            })
        }
        Command::Schur { s, kprime } => commands::schur(&ctx, s, kprime).map(|o| (o, true)),
        Command::Cauchy => commands::cauchy(&ctx),
    };
    match result {
        Ok((out, ok)) => {
            let code = emit(&out, cli.format);
            if !ok {
                return ExitCode::from(1);
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
