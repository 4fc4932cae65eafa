fn main() { std::process::exit(split_avoid::cli::main_with_std()) }
