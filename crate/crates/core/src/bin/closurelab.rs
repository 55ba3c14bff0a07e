fn main() {
    std::process::exit(closurelab::cli::main_with_env());
}
