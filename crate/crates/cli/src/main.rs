use std::io;
use std::process::ExitCode;

use thompson_cli::{run, Io};

fn main() -> ExitCode {
    let code = run(
        std::env::args_os(),
        &mut Io {
            stdin: &mut io::stdin(),
            stdout: &mut io::stdout(),
            stderr: &mut io::stderr(),
        },
    );
    ExitCode::from(code as u8)
}
