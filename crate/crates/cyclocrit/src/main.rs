fn main() {
    std::process::exit(cyclocrit::cli::run(std::env::args().collect()));
}
