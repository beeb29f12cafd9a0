//! Strip beat points until a minimal space remains.

use finite_realization::automorphisms::{beat_points, core, self_equivalences};
use finite_realization::group::{FiniteGroup, Retraction};
use finite_realization::{GeneratorSpec, Poset, RealizationSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A diamond with a tail: 0 < 1, 2 < 3 < 4.
    let labels = ["0", "1", "2", "3", "4"].map(String::from).to_vec();
    let diamond = Poset::new(labels, vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])?;
    println!("beat points: {:?}", beat_points(&diamond));
    let (reduced, trace) = core(&diamond);
    for step in &trace {
        println!("  remove {} ({:?})", step.label, step.kind);
    }
    println!("core has {} point(s)", reduced.len());

    // X_G is already minimal, so its self-equivalences are its automorphisms.
    let z3 = FiniteGroup::cyclic(3)?;
    let r = Retraction::identity(z3);
    let space = RealizationSpace::build(r.clone(), GeneratorSpec::new(&r, vec![], vec![1])?)?;
    let e = self_equivalences(space.poset());
    println!(
        "X_Z3: {} points, {} removed, |E| = {}",
        space.poset().len(),
        e.trace.len(),
        e.group.len()
    );
    Ok(())
}
