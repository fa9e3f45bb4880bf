use clap::Parser;

use takagi::cli::{self, Cli};

fn main() {
    // Optional worker count for the sampling subcommand.
    if let Ok(threads) = std::env::var("TAKAGI_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    let config = Cli::parse().into_config();
    match cli::run(config) {
        Ok(doc) => print!("{doc}"),
        Err(e) => {
            eprintln!("{}", cli::error_document(&e));
            std::process::exit(e.exit_code());
        }
    }
}
