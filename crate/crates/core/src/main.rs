fn main() {
    std::process::exit(rdyn::cli::run(std::env::args_os()));
}
