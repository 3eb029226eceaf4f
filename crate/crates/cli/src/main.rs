use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = tdmc::parse_command(std::env::args_os().skip(1)).and_then(|cmd| tdmc::run(&cmd));
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("tdmc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
