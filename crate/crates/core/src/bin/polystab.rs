fn main() {
    std::process::exit(polystab::cli::run(std::env::args_os()));
}
