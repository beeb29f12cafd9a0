//! Realize a finite group retraction `r: G → H` as a topological retraction
//! of a height-1 finite space `X_r`, and check the result by exhaustive
//! automorphism search.
//!
//! ```
//! use finite_realization::group::{FiniteGroup, GeneratorSpec, GeneratorStrategy, Retraction};
//! use finite_realization::verification::{verify_theorem, VerifyOptions};
//!
//! let z6 = FiniteGroup::cyclic(6).unwrap();
//! let r = Retraction::new(z6, (0..6).map(|x| 4 * x % 6).collect()).unwrap();
//! let gens = GeneratorSpec::default_for(&r, GeneratorStrategy::Greedy);
//! let report = verify_theorem(&r, &gens, &VerifyOptions::default());
//! assert!(report.passed);
//! assert_eq!(report.count("aut_x"), Some(6));
//! assert_eq!(report.count("aut_y"), Some(3));
//! ```

pub mod automorphisms;
pub mod cli;
pub mod group;
pub mod oracle;
pub mod poset;
pub mod realization;
pub mod verification;

pub use automorphisms::{enumerate_automorphisms, PermSet, Permutation};
pub use group::{FiniteGroup, GeneratorSpec, Retraction};
pub use poset::Poset;
pub use realization::{PointLabel, RealizationSpace};
pub use verification::VerificationReport;
