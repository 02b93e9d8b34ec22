fn main() {
    std::process::exit(kronbound::cli::main());
}
