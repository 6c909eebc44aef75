fn main() {
    std::process::exit(zll::run(std::env::args_os()));
}
