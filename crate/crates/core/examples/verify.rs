//! Run every invariant check in both modes and print the report.
//!
//! ```bash
//! cargo run --release --example verify
//! ```

use clifford4::analysis::{verify, verify_refinement, Analysis, Report};
use clifford4::gates::Mode;

fn main() -> clifford4::Result<()> {
    let complex = Analysis::build(Mode::Complex)?;
    let real = Analysis::build(Mode::Real)?;
    let mut report = Report::default();
    report.extend(verify(&complex, 500));
    report.extend(verify(&real, 500));
    report.extend(verify_refinement(&complex, &real));
    print!("{report}");
    let warnings = report.warnings().count();
    if report.has_failures() {
        println!("verification failed");
        std::process::exit(1);
    }
    println!("all checks passed ({warnings} warnings about the published data)");
    Ok(())
}
