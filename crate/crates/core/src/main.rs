fn main() {
    std::process::exit(sp_einstein::cli::run(std::env::args_os()));
}
