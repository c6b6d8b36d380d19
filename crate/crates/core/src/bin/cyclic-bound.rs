use std::io;
use std::process::ExitCode;

use cyclic_bound::cli;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    if let Err(e) = cli::init_threads() {
        use io::Write;
        let _ = writeln!(err, "error: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    ExitCode::from(cli::run(std::env::args_os(), &mut out, &mut err) as u8)
}
