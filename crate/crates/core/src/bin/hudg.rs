fn main() {
    std::process::exit(hudg::cli::run(std::env::args_os()));
}
