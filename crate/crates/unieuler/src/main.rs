use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let mut out = BufWriter::new(io::stdout().lock());
    let mut err = io::stderr().lock();
    let code = unieuler::cli::run(std::env::args_os(), &mut stdin, &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
