fn main() {
    std::process::exit(ghg::cli::run(std::env::args_os()));
}
