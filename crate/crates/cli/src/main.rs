use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use riordan_cli::{run, Cli};

fn main() -> ExitCode {
    // clap reports usage errors itself, with exit status 2.
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut io::stdin().lock(), &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("riordan: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
