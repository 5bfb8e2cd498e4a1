use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dormancy::PointLabel;
use serde::{Deserialize, Serialize};

/// Exact counts and censuses of tame self-maps of P^1, and a p-curvature
/// laboratory for rank-2 logarithmic connections.
#[derive(Parser, Debug)]
#[command(name = "dormancy", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Directory for CSV, JSON and manifest.json output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Replay the run recorded in a manifest.json.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,

    /// Worker threads (results do not depend on this).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Count maps with a ramification profile at general points.
    Count(CountArgs),
    /// Enumerate maps over F_{p^k} with ramification at given points.
    Census(CensusArgs),
    /// Residues, radii, p-curvature and level of a connection file.
    Pcurv(PcurvArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Count(_) => "count",
            Command::Census(_) => "census",
            Command::Pcurv(_) => "pcurv",
            Command::Verify(_) => "verify",
        }
    }
}

#[derive(ValueEnum, Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Recursive,
    ChainDp,
    ChainEnum,
    All,
}

#[derive(Args, Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CountArgs {
    #[arg(long)]
    pub p: u32,
    /// Ramification indices, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub profile: Vec<u32>,
    #[arg(long, value_enum, default_value = "all")]
    pub method: Method,
    /// List the admissible insertion chains.
    #[arg(long)]
    #[serde(default)]
    pub chains: bool,
}

#[derive(Args, Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CensusArgs {
    #[arg(long)]
    pub p: u64,
    /// Extension degree of the search field F_{p^k}.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Marked points as field encodings or `inf`, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub points: Vec<PointLabel>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub orders: Vec<u32>,
    /// Maximum number of branches plus candidates.
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
    /// Run every extension degree in this list instead of `--k`.
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub sweep: Vec<u32>,
}

#[derive(Args, Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct PcurvArgs {
    /// TOML connection file.
    pub file: PathBuf,
}

#[derive(ValueEnum, Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Equivalence,
    DormantSum,
    Parity,
    CensusVsFormula,
    ClosedForms,
    ConnectionProps,
}

#[derive(Args, Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Primes to run; each suite has its own default.
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub p: Vec<u32>,
    /// Largest profile length for the equivalence suite.
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    /// Random connections per prime for the connection suite.
    #[arg(long, default_value_t = 400)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn params_round_trip_through_json() {
        let cli = Cli::parse_from([
            "dormancy", "census", "--p", "5", "--points", "0,1,inf", "--orders", "2,2,3",
        ]);
        let cmd = cli.command.unwrap();
        let back: Command = serde_json::from_str(&serde_json::to_string(&cmd).unwrap()).unwrap();
        assert_eq!(back, cmd);
    }
}
