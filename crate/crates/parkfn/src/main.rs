fn main() {
    std::process::exit(parkfn::cli::run_from_env());
}
