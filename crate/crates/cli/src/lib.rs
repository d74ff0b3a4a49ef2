//! Verification suites for the `uvt` command-line tool.

pub mod report;
pub mod suites;

pub use report::{Entry, Report, Status};
pub use suites::{Mode, RunConfig};

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Relations,
    Braid,
    HeckeAction,
    Commutant,
    Idempotents,
    Decompose,
    Pairing,
    Jm,
    All,
}

/// Runs one suite.
pub fn run(command: Command, cfg: &RunConfig) -> uvt_core::Result<Report> {
    match command {
        Command::Relations => suites::relations(cfg),
        Command::Braid => suites::braid(cfg),
        Command::HeckeAction => suites::hecke_action(cfg),
        Command::Commutant => suites::commutant(cfg),
        Command::Idempotents => suites::idempotents(cfg),
        Command::Decompose => suites::decompose_cmd(cfg),
        Command::Pairing => suites::pairing(cfg),
        Command::Jm => suites::jm(cfg),
        Command::All => suites::all(cfg),
    }
}
