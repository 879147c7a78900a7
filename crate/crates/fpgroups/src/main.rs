fn main() {
    std::process::exit(fpgroups::cli::run(std::env::args_os()));
}
