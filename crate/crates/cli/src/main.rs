use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = ssplat_cli::run(std::env::args_os());
    let result = if code == 2 {
        std::io::stderr().write_all(text.as_bytes())
    } else {
        std::io::stdout().write_all(text.as_bytes())
    };
    if result.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code as u8)
}
