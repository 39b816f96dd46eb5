use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = starbrace_cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(starbrace_cli::EXIT_INPUT_ERROR as u8);
    }
    let outcome = starbrace_cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
