//! Run every verification suite and print the report.

use pebbling::verify::{verify_all, VerifyConfig};

fn main() -> pebbling::Result<()> {
    let report = verify_all(&VerifyConfig::default())?;
    print!("{report}");
    if let Some(bad) = report.first_failure() {
        eprintln!(
            "first failure: [{}] {} {:?}",
            bad.suite, bad.name, bad.first_failure
        );
        std::process::exit(1);
    }
    Ok(())
}
