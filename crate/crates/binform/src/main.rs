fn main() {
    std::process::exit(binform::cli::run());
}
