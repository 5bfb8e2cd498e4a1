mod cli;
mod commands;
mod connection_file;
mod output;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::Parser;

use crate::cli::Cli;
use crate::output::{persist, RunManifest};

const EXIT_INPUT: u8 = 2;

fn run(cli: Cli) -> Result<u8> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    let command = match (cli.command, &cli.manifest) {
        (Some(_), Some(_)) => bail!("--manifest replays a recorded run and takes no subcommand"),
        (Some(c), None) => c,
        (None, Some(path)) => RunManifest::load(path)?.params,
        (None, None) => bail!("a subcommand or --manifest is required"),
    };
    let exec = commands::execute(&command)?;
    let mut out = std::io::stdout().lock();
    out.write_all(exec.stdout.as_bytes())?;
    out.flush()?;
    if let Some(dir) = &cli.out {
        persist(dir, &exec, &RunManifest::new(&command))?;
    }
    Ok(exec.code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
