use std::process::ExitCode;

use pss_bench::cli::{list_problems, parse_cli, Command};
use pss_bench::export::export;
use pss_bench::run_batch;

fn main() -> ExitCode {
    let config = match parse_cli(std::env::args_os()) {
        Ok(Command::ListProblems) => {
            print!("{}", list_problems());
            return ExitCode::SUCCESS;
        }
        Ok(Command::Run(config)) => config,
        Err(e) => e.exit(),
    };
    let result = run_batch(&config)
        .and_then(|report| export(&report, config.format, config.output.as_deref()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pss-bench: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
