fn main() {
    std::process::exit(bwbverify::cli::run());
}
