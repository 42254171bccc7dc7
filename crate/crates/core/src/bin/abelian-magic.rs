fn main() {
    std::process::exit(abelian_magic::cli::run(std::env::args_os()));
}
