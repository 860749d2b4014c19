fn main() {
    std::process::exit(chaindd_bench::cli::main_exit_code());
}
