//! Automorphism search on a few small posets, cross-checked against brute
//! force, followed by a seeded batch of random posets.

use finite_realization::automorphisms::{automorphisms_naive, enumerate_automorphisms};
use finite_realization::oracle::run_oracle_suite;
use finite_realization::Poset;

fn crown(n: usize) -> Poset {
    let labels = (0..n)
        .map(|i| format!("b{i}"))
        .chain((0..n).map(|i| format!("t{i}")))
        .collect();
    let covers = (0..n).flat_map(|i| [(i, n + i), ((i + 1) % n, n + i)]).collect();
    Poset::new(labels, covers).expect("crown is a poset")
}

fn main() {
    let samples = [
        ("4-antichain", Poset::antichain(4)),
        ("5-chain", Poset::chain(5)),
        ("crown on 8 points", crown(4)),
    ];
    for (name, poset) in &samples {
        let aut = enumerate_automorphisms(poset);
        let naive = automorphisms_naive(poset).expect("small enough for brute force");
        println!(
            "{name:<18} |Aut| = {:<3} orders {:?}  agrees: {}",
            aut.len(),
            aut.order_histogram(),
            aut == naive
        );
    }

    let report = run_oracle_suite(2024, 50, 8);
    println!(
        "random posets: {} cases, {} mismatches",
        report.cases.len(),
        report.mismatches
    );
}
