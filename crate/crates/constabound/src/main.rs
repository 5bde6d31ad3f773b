use clap::Parser;

use constabound::cli::{self, Cli};

fn main() {
    let args = Cli::parse();
    match cli::run(&args) {
        Ok(doc) => {
            if args.json {
                print!("{}", doc.to_json());
            } else {
                print!("{}", cli::render_human(&doc));
            }
            std::process::exit(cli::exit_code(&doc));
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(cli::exit_code_for_error(&e));
        }
    }
}
