fn main() {
    std::process::exit(liecodes::cli::run());
}
