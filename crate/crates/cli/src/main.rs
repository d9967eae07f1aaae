fn main() {
    std::process::exit(zinbiel_cli::run(std::env::args_os()));
}
