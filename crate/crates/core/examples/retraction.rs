//! Realize the retraction x ↦ 4x of Z6 onto its subgroup {0, 2, 4}.
//! Prints where r̄ sends a few points and the size of Aut on both spaces.

use finite_realization::group::{FiniteGroup, GeneratorStrategy, Retraction};
use finite_realization::{enumerate_automorphisms, GeneratorSpec, PointLabel, RealizationSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z6 = FiniteGroup::cyclic(6)?;
    let r = Retraction::new(z6, (0..6).map(|x| 4 * x % 6).collect())?;
    println!("kernel {:?}, image {:?}", r.kernel(), r.image());

    let gens = GeneratorSpec::default_for(&r, GeneratorStrategy::Greedy);
    let space = RealizationSpace::build(r, gens)?;
    println!(
        "S1 {:?}  S2 {:?}  m = {}",
        space.gens().s1(),
        space.gens().s2(),
        space.m()
    );

    let rbar = space.rbar()?;
    for label in ["1:0", "3:*1", "5:2:4", "2:-1:6"] {
        let x = space.index_of(&label.parse::<PointLabel>()?).expect("label exists");
        println!("r̄({label}) = {}", space.label(rbar[x]));
    }

    let image = space.image_space()?;
    let aut_x = enumerate_automorphisms(space.poset());
    let aut_y = enumerate_automorphisms(image.poset());
    println!("|X_r| = {}, |Y| = {}", space.poset().len(), image.poset().len());
    println!("|Aut(X_r)| = {}, |Aut(Y)| = {}", aut_x.len(), aut_y.len());
    Ok(())
}
