fn main() {
    std::process::exit(suffixient::cli::run());
}
