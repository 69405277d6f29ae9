use clap::Parser;

fn main() {
    let cli = mixsent::cli::Cli::parse();
    if let Err(e) = mixsent::cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
