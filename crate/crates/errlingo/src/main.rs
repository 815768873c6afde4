use clap::Parser;

use errlingo::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    std::process::exit(execute(cli));
}
