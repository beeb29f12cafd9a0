//! Write the gadget C_e with `m` arms as Graphviz DOT.
//!
//!     cargo run --example gadget_dot -- 2 | dot -Tsvg > gadget.svg

use finite_realization::realization::{component_poset, ComponentLayout};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2);
    let poset = component_poset(0, m)?;
    eprintln!(
        "C_e with m = {m}: {} points, {} covers, height {}",
        ComponentLayout::new(m).size(),
        poset.covers().len(),
        poset.height()
    );
    print!("{}", poset.to_dot());
    Ok(())
}
