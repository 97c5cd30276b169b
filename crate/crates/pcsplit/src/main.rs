fn main() {
    let code = pcsplit::cli::parse_and_dispatch(std::env::args());
    std::process::exit(code);
}
