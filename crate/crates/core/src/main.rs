use clap::Parser;

fn main() {
    let cli = eaqecc::cli::Cli::parse();
    if let Err(err) = eaqecc::cli::run(&cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
