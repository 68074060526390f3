fn main() {
    std::process::exit(gated_ee_cli::main_with_args(std::env::args_os()));
}
