use std::process::ExitCode;

use clap::Parser;
use cubic_lines::report::{render_human, to_json_text, write_atomic};
use cubic_lines::{run, Cli, CliError};

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which is also our parse-error code
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}

fn execute(cli: Cli) -> Result<u8, CliError> {
    let cfg = cli.into_config()?;
    let outcome = run(&cfg)?;
    for line in &outcome.diagnostics {
        eprintln!("{}", line);
    }
    let json = to_json_text(&outcome.report);
    if let Some(path) = &cfg.output {
        write_atomic(path, &json)?;
    }
    if cfg.json {
        print!("{}", json);
    } else {
        print!("{}", render_human(&outcome.report));
    }
    Ok(outcome.exit)
}
