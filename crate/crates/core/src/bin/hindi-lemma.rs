use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut output = io::BufWriter::new(io::stdout().lock());
    let code = hindi_lemma::cli::run(
        std::env::args_os(),
        &mut input,
        &mut output,
        &mut io::stderr(),
    );
    let _ = output.flush();
    ExitCode::from(code as u8)
}
