fn main() {
    std::process::exit(umemura::cli::run());
}
