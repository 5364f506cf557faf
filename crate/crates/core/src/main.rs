fn main() {
    std::process::exit(hahn_core::cli::main_with_args(std::env::args_os()));
}
