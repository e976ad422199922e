fn main() {
    std::process::exit(askey::cli::main_with(std::env::args_os()));
}
