fn main() {
    std::process::exit(kkwreath::cli::run(std::env::args_os()));
}
