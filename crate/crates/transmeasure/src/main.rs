fn main() {
    std::process::exit(transmeasure::cli::dispatch(std::env::args_os()));
}
