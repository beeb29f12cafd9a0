//! Save the manifest of a build and rebuild an identical space from it.

use finite_realization::group::{FiniteGroup, GeneratorStrategy, Retraction};
use finite_realization::realization::Manifest;
use finite_realization::{GeneratorSpec, RealizationSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let klein = FiniteGroup::product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(2)?)?;
    // Project Z2 × Z2 onto its first factor.
    let r = Retraction::new(klein, vec![0, 0, 2, 2])?;
    let space = RealizationSpace::build(r.clone(), GeneratorSpec::default_for(&r, GeneratorStrategy::Greedy))?;

    let json = serde_json::to_string_pretty(&space.manifest())?;
    println!("{json}");

    let manifest: Manifest = serde_json::from_str(&json)?;
    let rebuilt = RealizationSpace::from_manifest(&manifest)?;
    println!("rebuilt identical poset: {}", rebuilt.poset() == space.poset());
    Ok(())
}
