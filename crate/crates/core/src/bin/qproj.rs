use clap::Parser;
use qproj::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (code, out) = run(&cli);
    if code == qproj::cli::EXIT_USAGE {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
