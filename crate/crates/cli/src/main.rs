fn main() {
    std::process::exit(spiralfield::execute());
}
