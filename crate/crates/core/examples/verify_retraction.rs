//! Run the full clause-by-clause check on a retraction read from a JSON
//! file, or on the sign section of S3 when no file is given.
//!
//!     cargo run --example verify_retraction -- dihedral:4 endo.json

use std::path::Path;

use finite_realization::group::{make_group, FiniteGroup, GeneratorStrategy, Retraction};
use finite_realization::verification::{verify_theorem, Status, VerifyOptions};
use finite_realization::GeneratorSpec;

fn sign_section() -> Result<Retraction, Box<dyn std::error::Error>> {
    let s3 = FiniteGroup::symmetric(3)?;
    // Collapse every odd permutation onto one fixed transposition.
    let t = (0..6)
        .find(|&x| s3.element_order(x) == 2)
        .expect("S3 has transpositions");
    let endo = (0..6).map(|x| if s3.element_order(x) == 2 { t } else { 0 }).collect();
    Ok(Retraction::new(s3, endo)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let r = match args.as_slice() {
        [group, path] => Retraction::from_file(make_group(&group.parse()?)?, Path::new(path))?,
        _ => sign_section()?,
    };
    let gens = GeneratorSpec::default_for(&r, GeneratorStrategy::Greedy);
    let report = verify_theorem(&r, &gens, &VerifyOptions::default());

    for clause in &report.clauses {
        let mark = match clause.status {
            Status::Pass => "ok",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        println!("{mark:>4}  {:<8} {}", clause.id, clause.description);
    }
    println!(
        "{}",
        if report.passed {
            "all clauses hold"
        } else {
            "some clause failed"
        }
    );
    Ok(())
}
