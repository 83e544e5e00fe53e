use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use borderline::{run, Cli, Context};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli, &Context::from_env()) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout().lock(), "{}", out.render(cli.global.json));
            ExitCode::from(out.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
    }
}
