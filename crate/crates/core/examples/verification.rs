//! The standard verification suite: membership, graded symbols,
//! generation and the operator identities on a fixed set of realizations.
//!
//! ```text
//! cargo run --release --example verification -- standard
//! ```

use finite_w::verify::{run_suite, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "quick".into());
    let report = run_suite(&suite, &VerifyOptions::default())?;
    print!("{}", report.to_text());
    if !report.passed {
        std::process::exit(1);
    }
    Ok(())
}
