fn main() {
    std::process::exit(piecewise::cli::main());
}
