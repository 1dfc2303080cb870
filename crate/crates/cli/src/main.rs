use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tribisect_cli::error::{EXIT_OK, EXIT_ORACLE};
use tribisect_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            if out.passed {
                EXIT_OK
            } else {
                eprintln!("error: one or more lines failed the area check");
                EXIT_ORACLE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
