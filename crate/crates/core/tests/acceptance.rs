//! Acceptance criteria, one line per criterion. Exits nonzero on any failure.

use std::process::ExitCode;

use koethe::verify::{run_suite, SuiteParams};

const CRITERIA: [(usize, &str, &str, f64); 10] = [
    (1, "holder-duality", "Hölder duality of ℓ_p", 10.0),
    (2, "reflexivity", "finite-dimensional reflexivity", 60.0),
    (
        3,
        "oracle-equivalence",
        "linear_max agrees with the grid oracle",
        60.0,
    ),
    (
        4,
        "lorentz-multipliers",
        "multipliers from ℓ_q into Lorentz spaces",
        300.0,
    ),
    (
        5,
        "ln-convex",
        "diagonal n-linear norms on n-convex domains",
        120.0,
    ),
    (
        6,
        "ln-multipliers",
        "diagonal n-linear norms as multipliers",
        120.0,
    ),
    (
        7,
        "integral-duality",
        "integral norms and the trace pairing",
        300.0,
    ),
    (
        8,
        "summing-anchor",
        "summing estimate on ℓ_∞ domains",
        120.0,
    ),
    (
        9,
        "convexification",
        "convexification of summing norms",
        10.0,
    ),
    (
        10,
        "norm-axioms",
        "norm axioms for every constructible space",
        30.0,
    ),
];

fn main() -> ExitCode {
    let seed = std::env::var("KOETHE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let params = SuiteParams::seeded(seed);
    let mut failed = 0;
    for (id, suite, title, budget) in CRITERIA {
        let line = match run_suite(suite, &params) {
            Ok(report) => {
                let in_time = report.elapsed_secs < budget;
                let ok = report.passed && in_time;
                if !ok {
                    failed += 1;
                }
                let worst = report
                    .checks
                    .iter()
                    .map(|c| format!("{} {:.2e}/{:.0e}", c.label, c.max_deviation, c.tolerance))
                    .collect::<Vec<_>>()
                    .join("; ");
                let detail = if report.passed {
                    String::new()
                } else {
                    format!("\n{report}")
                };
                format!(
                    "{} criterion {id:>2} [{suite}] {title}: {} cases, {:.2}s of {budget:.0}s{}; {worst}{detail}",
                    if ok { "pass" } else { "FAIL" },
                    report.cases(),
                    report.elapsed_secs,
                    if in_time { "" } else { " (over time budget)" },
                )
            }
            Err(e) => {
                failed += 1;
                format!("FAIL criterion {id:>2} [{suite}] {title}: {e}")
            }
        };
        println!("{line}");
    }
    println!(
        "{} of {} criteria passed (seed {seed})",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
