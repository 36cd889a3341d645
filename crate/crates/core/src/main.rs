fn main() {
    std::process::exit(schnyder_at::cli::run());
}
