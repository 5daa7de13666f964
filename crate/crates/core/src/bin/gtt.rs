fn main() {
    std::process::exit(gtt::cli::run(std::env::args_os()));
}
