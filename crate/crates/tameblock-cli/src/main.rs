use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = tameblock_cli::Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match tameblock_cli::run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
