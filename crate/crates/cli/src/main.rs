use clap::Parser;
use uep_cli::args::Cli;
use uep_cli::error::EXIT_OK;

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let code = match uep_cli::run(&cli, &mut stdout.lock()) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
