//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug, Serialize)]
#[command(name = "eo", version, about = "Exact enumerative tables, WKB hierarchies and their verification suites")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GlobalOpts {
    /// Output format. Defaults to `pretty` for values and `json` for reports.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Directory holding `memo.json`. Defaults to `$HOME/.cache/eo`.
    #[arg(long, global = true, env = "EO_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the memo cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Worker threads for verification suites.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    /// Tolerance for floating-point probes.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tolerance: f64,
    /// Largest `2g−2+n` for which free energies are built.
    #[arg(long, global = true, default_value_t = 3)]
    pub bound: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelArg {
    Catalan,
    Hurwitz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteArg {
    Catalan,
    Hurwitz,
    Wkb,
    Schur,
    All,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Dessin counts, Catalan free energies and WKB coefficients.
    #[command(subcommand)]
    Catalan(CatalanCmd),
    /// Simple Hurwitz numbers, free energies and WKB coefficients.
    #[command(subcommand)]
    Hurwitz(HurwitzCmd),
    /// Operator hierarchy on the spectral curves.
    #[command(subcommand)]
    Wkb(WkbCmd),
    /// Characters and the tau-function identities.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Move the memo cache in and out of files.
    #[command(subcommand)]
    Cache(CacheCmd),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Profile {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub n: u32,
    /// Comma-separated parts, e.g. `3,1`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub mu: Vec<u32>,
}

#[derive(Args, Debug, Clone, Copy, Serialize)]
pub struct Topology {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub n: u32,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalanCmd {
    /// Count `C_{g,n}(μ)`.
    Count(Profile),
    /// `F^C_{g,n}` as a Laurent polynomial in `t_1..t_n`.
    FreeEnergy(Topology),
    /// `S_m` in `t` and `z`.
    SCoeff {
        #[arg(long)]
        m: u32,
    },
    /// Check the Schrödinger equation through `ħ^{order}`.
    VerifySchrodinger {
        #[arg(long, default_value_t = 3)]
        order: u32,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HurwitzCmd {
    /// Weighted count `H_g(μ)`.
    Number(Profile),
    /// `F^H_{g,n}` and its ELSV coefficients.
    FreeEnergy(Topology),
    /// `S_m` in `t`, checked along both constructions.
    SCoeff {
        #[arg(long)]
        m: u32,
    },
    /// Run Hurwitz checks, optionally restricted by id fragment.
    Verify {
        /// e.g. `recursion`, `heat`, `zhou`, `commutator`, `lambert`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_order: u32,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WkbCmd {
    /// Recover the corrections `A_k`; all vanish when the quantum curve holds.
    Corrections {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 4)]
        order: u32,
    },
    /// `dS_n/dx` in `z` solved from the hierarchy alone.
    SPrime {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchurCmd {
    /// Run the Schur checks.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
        #[arg(long, default_value_t = 6)]
        s_order: u32,
    },
    /// `χ^μ(λ)`, or the whole column over `λ` when omitted.
    Character {
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<u32>>,
    },
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 4)]
    pub max_order: u32,
    #[arg(long, default_value_t = 6)]
    pub max_weight: u32,
    #[arg(long, default_value_t = 6)]
    pub s_order: u32,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CacheCmd {
    /// Write the cached tables to a file, or stdout.
    Export {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a snapshot and merge it into the cache.
    Import {
        #[arg(long)]
        from: PathBuf,
    },
}
