//! Runs the whole check suite over connected graphs on up to four vertices.

use cutideal::verify::{run_verification, VerifyOptions};

fn main() -> Result<(), cutideal::Error> {
    let report = run_verification(VerifyOptions {
        n_max: 4,
        ..VerifyOptions::default()
    })?;
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
