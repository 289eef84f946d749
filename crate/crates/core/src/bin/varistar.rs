fn main() {
    std::process::exit(varistar::cli::run_cli(std::env::args_os()));
}
