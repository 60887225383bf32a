fn main() {
    std::process::exit(arck0::cli::main_with_args(std::env::args_os()));
}
