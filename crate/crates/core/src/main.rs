fn main() {
    std::process::exit(circlelab::cli::run(std::env::args_os()));
}
