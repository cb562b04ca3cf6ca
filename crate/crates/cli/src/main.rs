fn main() {
    std::process::exit(rootode_cli::main_with_args(std::env::args_os()));
}
