fn main() {
    std::process::exit(chardiv::cli::run(std::env::args_os()));
}
