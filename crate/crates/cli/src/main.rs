fn main() {
    std::process::exit(sqdist_cli::run(std::env::args_os()));
}
