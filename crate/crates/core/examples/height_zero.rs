//! Discrete spaces: Aut of n points is the full symmetric group.

use finite_realization::verification::{verify_height0, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=5 {
        let report = verify_height0(n, &VerifyOptions::default())?;
        println!(
            "n = {n}: |Aut| = {:<4} passed = {}",
            report.count("aut_x").unwrap_or(0),
            report.passed
        );
    }
    Ok(())
}
