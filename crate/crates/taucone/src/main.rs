fn main() {
    std::process::exit(taucone::cli::run(std::env::args_os()));
}
