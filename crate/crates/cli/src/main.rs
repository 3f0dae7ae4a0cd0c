fn main() {
    std::process::exit(bnloci_cli::main_entry());
}
