//! Runs the verification suites with small parameters and prints each report.
//!
//! cargo run --release --example verification [seed]

use koethe::verify::{run_suite, SuiteParams, SUITES};

fn main() -> koethe::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let params = SuiteParams {
        n_max: Some(4),
        cases: Some(5),
        seed,
    };
    for name in SUITES {
        print!("{}", run_suite(name, &params)?);
    }
    Ok(())
}
