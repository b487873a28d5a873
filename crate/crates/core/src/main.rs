fn main() {
    std::process::exit(mapblocks::cli::run(std::env::args_os()));
}
