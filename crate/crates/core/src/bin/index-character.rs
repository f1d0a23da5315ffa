use std::io::Write;

use index_character::cli::{run, EXIT_INVALID};

fn main() {
    let (code, out) = run(std::env::args_os());
    let _ = if code == EXIT_INVALID {
        std::io::stderr().write_all(out.as_bytes())
    } else {
        std::io::stdout().write_all(out.as_bytes())
    };
    std::process::exit(code);
}
