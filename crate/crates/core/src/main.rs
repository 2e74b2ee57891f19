fn main() {
    std::process::exit(sepvol::cli::run());
}
