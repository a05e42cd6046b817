fn main() {
    let outcome = koethe::cli::run_args(std::env::args_os());
    if outcome.status == koethe::cli::EXIT_OK || outcome.status == koethe::cli::EXIT_VERIFY_FAILED {
        println!("{}", outcome.document);
    } else {
        eprintln!("{}", outcome.document);
    }
    std::process::exit(outcome.status);
}
