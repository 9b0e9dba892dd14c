use std::process::ExitCode;

use clap::Parser;
use tamarkin::{run, Cli, Failure};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match run(&cli).and_then(|out| out.render(cli.format)) {
        Ok(text) => text,
        Err(e) => return fail(&e),
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}

fn fail(e: &Failure) -> ExitCode {
    eprintln!("tamarkin: {e}");
    ExitCode::from(e.exit_code())
}
