//! Seeded random posets and the search-vs-brute-force equivalence suite.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automorphisms::{automorphisms_naive, enumerate_automorphisms, NAIVE_LIMIT};
use crate::poset::Poset;

/// A random poset on `n` points: a shuffled linear extension, each forward
/// pair related with probability `density`, then transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut rank: Vec<usize> = (0..n).collect();
    rank.shuffle(rng);
    let mut less = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            if rank[a] < rank[b] && rng.gen_bool(density) {
                less[a][b] = true;
            }
        }
    }
    // Warshall closure
    for k in 0..n {
        let row_k = less[k].clone();
        for row in less.iter_mut() {
            if row[k] {
                for (cell, &through) in row.iter_mut().zip(&row_k) {
                    *cell |= through;
                }
            }
        }
    }
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    Poset::from_relation(labels, |a, b| less[a][b]).expect("closed strict order is a valid poset")
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleCase {
    pub points: usize,
    pub covers: usize,
    pub automorphisms: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub seed: u64,
    pub cases: Vec<OracleCase>,
    pub mismatches: usize,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compares [`enumerate_automorphisms`] with [`automorphisms_naive`] on
/// `count` random posets of 1 to `max_points` points.
pub fn run_oracle_suite(seed: u64, count: usize, max_points: usize) -> OracleReport {
    let max_points = max_points.clamp(1, NAIVE_LIMIT);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<OracleCase> = (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_points);
            let density = rng.gen_range(0.0..0.7);
            let poset = random_poset(&mut rng, n, density);
            let fast = enumerate_automorphisms(&poset);
            let slow = automorphisms_naive(&poset).expect("within the brute-force limit");
            OracleCase {
                points: n,
                covers: poset.covers().len(),
                automorphisms: slow.len(),
                agrees: fast == slow,
            }
        })
        .collect();
    let mismatches = cases.iter().filter(|c| !c.agrees).count();
    OracleReport {
        seed,
        cases,
        mismatches,
    }
}
