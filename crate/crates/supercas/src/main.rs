fn main() {
    std::process::exit(supercas::cli::run(std::env::args_os()));
}
