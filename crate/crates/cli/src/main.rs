fn main() {
    std::process::exit(hyqec_cli::run());
}
