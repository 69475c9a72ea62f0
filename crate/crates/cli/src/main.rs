use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lcplab::commands::{run, status_of, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let status = match run(cli, &mut out) {
        Ok(status) => status,
        Err(err) => {
            print!("{out}");
            eprintln!("error: {err:#}");
            return ExitCode::from(status_of(&err) as u8);
        }
    };
    print!("{out}");
    let _ = std::io::stdout().flush();
    ExitCode::from(status as u8)
}
