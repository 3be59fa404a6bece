fn main() {
    std::process::exit(sp2sigma::cli::main_with_args(std::env::args_os()));
}
