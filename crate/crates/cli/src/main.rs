use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = intseq_cli::run_args(std::env::args_os());
    let written = if outcome.is_error {
        std::io::stderr().write_all(outcome.text.as_bytes())
    } else {
        std::io::stdout().write_all(outcome.text.as_bytes())
    };
    if written.is_err() {
        return ExitCode::FAILURE;
    }
    ExitCode::from(outcome.exit_code as u8)
}
