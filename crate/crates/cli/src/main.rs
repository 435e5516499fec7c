use std::process::exit;

fn main() {
    exit(eulerheat_cli::run(std::env::args_os()))
}
