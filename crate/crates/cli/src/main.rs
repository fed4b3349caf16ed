mod args;
mod cache;
mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use eo_core::catalan::CatalanModel;
use eo_core::hurwitz::HurwitzModel;
use eo_core::report::Engine;
use eo_core::schur::CharacterTable;
use serde::Serialize;

use args::{Cli, Command, Format};
use commands::Context;
use error::CliError;

/// The serialized form of a run; echoed into every JSON result.
#[derive(Serialize)]
struct RunConfig<'a> {
    command: &'a Command,
    format: Option<Format>,
    cache_dir: Option<&'a PathBuf>,
    parallelism: u32,
    tolerance: f64,
    bound: u32,
    version: &'static str,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("eo: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let g = &cli.global;
    if g.tolerance.is_nan() || g.tolerance <= 0.0 {
        return Err(CliError::Usage(format!("--tolerance must be positive, got {}", g.tolerance)));
    }
    let cache_dir = if g.no_cache { None } else { g.cache_dir.clone().or_else(cache::default_dir) };
    let cache_file = cache_dir.as_ref().map(|d| d.join(cache::FILE_NAME));

    let engine = Engine {
        catalan: CatalanModel::with_bound(g.bound),
        hurwitz: HurwitzModel::with_bound(g.bound),
        characters: CharacterTable::new(),
    };
    let mut dirty = false;
    if let Some(path) = &cache_file {
        match cache::read_or_empty(path) {
            Ok(snap) => {
                let warnings = snap.apply(&engine);
                for w in &warnings {
                    eprintln!("warning: {w}; recomputing");
                }
                dirty = !warnings.is_empty();
            }
            Err(e) => {
                eprintln!("warning: ignoring unreadable cache {e}");
                dirty = true;
            }
        }
    }
    let loaded = cache::Snapshot::capture(&engine).len();

    let config = serde_json::to_value(RunConfig {
        command: &cli.command,
        format: g.format,
        cache_dir: cache_dir.as_ref(),
        parallelism: g.jobs,
        tolerance: g.tolerance,
        bound: g.bound,
        version: env!("CARGO_PKG_VERSION"),
    })?;
    let ctx = Context { engine: &engine, config, cache_file: cache_file.as_deref() };
    let out = commands::run(cli, &ctx)?;

    if let Some(path) = &cache_file {
        let snap = cache::Snapshot::capture(&engine);
        if dirty || snap.len() != loaded {
            if let Err(e) = cache::write(path, &snap) {
                eprintln!("warning: cache not saved: {e}");
            }
        }
    }

    match out.render(g.format, &mut std::io::stdout().lock()) {
        Err(CliError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => Ok(out.pass),
        Err(e) => Err(e),
        Ok(()) => Ok(out.pass),
    }
}
