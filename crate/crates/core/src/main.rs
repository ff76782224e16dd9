fn main() {
    std::process::exit(klr_core::cli::main_with_args(std::env::args_os()));
}
