fn main() {
    std::process::exit(klrkit::cli::run());
}
