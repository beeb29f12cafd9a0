//! Build X_G for the symmetric group S3 and check that its automorphism
//! group is exactly the left translations.
//!
//!     cargo run --example realize_group [-- symmetric:3]

use finite_realization::group::{make_group, GeneratorStrategy, Retraction};
use finite_realization::verification::{verify_corollary, VerifyOptions};
use finite_realization::{enumerate_automorphisms, GeneratorSpec, RealizationSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "symmetric:3".into());
    let group = make_group(&spec.parse()?)?;

    let retraction = Retraction::identity(group.clone());
    let gens = GeneratorSpec::default_for(&retraction, GeneratorStrategy::Greedy);
    let space = RealizationSpace::build(retraction, gens)?;
    let aut = enumerate_automorphisms(space.poset());

    println!("group      {} (order {})", group.name(), group.order());
    println!("generators {:?}", space.gens().s2());
    println!("points     {}", space.poset().len());
    println!("|Aut(X_G)| {}", aut.len());

    let translations = group.elements().filter(|&g| aut.contains(&space.action(g))).count();
    println!("translations in Aut: {translations}/{}", group.order());

    let report = verify_corollary(&group, GeneratorStrategy::Greedy, &VerifyOptions::default());
    print!("{}", report.to_text());
    Ok(())
}
