fn main() {
    std::process::exit(tacap::cli::run(std::env::args_os()));
}
