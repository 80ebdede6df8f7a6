use std::io::{self, Write};
use std::process::ExitCode;

use pythia::cli;

fn main() -> ExitCode {
    let width = std::env::var(cli::WIDTH_ENV).ok();
    if let Err(e) = cli::apply_width_env(width.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(cli::EXIT_ERROR as u8);
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    if out.flush().is_err() {
        return ExitCode::from(cli::EXIT_ERROR as u8);
    }
    ExitCode::from(code as u8)
}
