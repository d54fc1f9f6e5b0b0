use std::process::ExitCode;

use clap::Parser;
use morreylab_cli::{configure_threads, execute, render, Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let format = match &cli.command {
        Command::Eval { output, .. }
        | Command::Norm { output, .. }
        | Command::Apq { output, .. }
        | Command::Dini { output, .. }
        | Command::Verify { output, .. } => output.format,
    };
    match configure_threads().and_then(|()| execute(&cli)) {
        Ok(summary) => {
            println!("{}", render(&summary, format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
