fn main() {
    std::process::exit(shefferlab::cli::run());
}
