fn main() {
    std::process::exit(cyclo::run(std::env::args_os()));
}
