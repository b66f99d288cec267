fn main() {
    std::process::exit(zeroenergy::cli::run(std::env::args_os()));
}
