use std::process::ExitCode;

fn main() -> ExitCode {
    match alt::cli::run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("alt: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
