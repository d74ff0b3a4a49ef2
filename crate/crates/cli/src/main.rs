use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use uvt_cli::{run, Command, Mode, RunConfig};

#[derive(Parser)]
#[command(name = "uvt", version, about = "Exact verification suites for two-parameter quantum sl_n and Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Rank parameter of U_{v,t}(sl_n)
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    n: u32,

    /// Tensor power / Hecke algebra rank
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,

    /// Idempotent formula for `idempotents`
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Compare)]
    mode: ModeArg,

    /// Largest height of the canonical element truncation
    #[arg(long, global = true, default_value_t = 2)]
    height: u32,

    /// Largest allowed dimension n^k
    #[arg(long, global = true, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for the specialization point used when picking rank pivots
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Defining relations on the natural module and its tensor powers
    Relations,
    /// Braid relations for both R-matrices
    Braid,
    /// Hecke algebra action on V_n^{⊗k}
    HeckeAction,
    /// Commutation of the Hecke action with the quantum group
    Commutant,
    /// Primitive idempotents of the Hecke algebra
    Idempotents,
    /// Schur-Weyl decomposition ranks
    Decompose,
    /// Hopf pairing and canonical element
    Pairing,
    /// Jucys-Murphy elements
    Jm,
    /// Every suite at acceptance sizes
    All,
}

#[derive(ValueEnum, Clone, Copy)]
enum ModeArg {
    Inductive,
    Fusion,
    Compare,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Relations => Command::Relations,
        Cmd::Braid => Command::Braid,
        Cmd::HeckeAction => Command::HeckeAction,
        Cmd::Commutant => Command::Commutant,
        Cmd::Idempotents => Command::Idempotents,
        Cmd::Decompose => Command::Decompose,
        Cmd::Pairing => Command::Pairing,
        Cmd::Jm => Command::Jm,
        Cmd::All => Command::All,
    };
    let cfg = RunConfig {
        n: cli.n as usize,
        k: cli.k as usize,
        mode: match cli.mode {
            ModeArg::Inductive => Mode::Inductive,
            ModeArg::Fusion => Mode::Fusion,
            ModeArg::Compare => Mode::Compare,
        },
        height: cli.height as usize,
        cap: usize::try_from(cli.cap).unwrap_or(usize::MAX),
        seed: cli.seed,
    };
    let report = match run(command, &cfg) {
        Ok(r) => r,
        Err(e @ (uvt_core::Error::SizeCap { .. } | uvt_core::Error::Invalid(_))) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let text = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
