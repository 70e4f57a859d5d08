fn main() {
    std::process::exit(diskdet_cli::run(std::env::args_os()));
}
