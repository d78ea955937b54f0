mod args;
mod run;

use args::Cli;
use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("dhp: cannot start {jobs} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("dhp: {e:#}");
            ExitCode::from(run::exit_code_for(&e))
        }
    }
}
