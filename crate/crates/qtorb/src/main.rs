fn main() { std::process::exit(qtorb::cli::run()); }
