//! Exact Lie-theoretic computations for homogeneous roofs.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`]: root systems, weights and the coroot pairing;
//! * [`weyl`]: Weyl group elements, orbits and minimal coset representatives;
//! * [`reps`]: Weyl dimensions, Freudenthal multiplicities, exterior powers,
//!   Levi decompositions and duals;
//! * [`bwb`]: the Borel–Weil–Bott solver for homogeneous bundles;
//! * [`motive`]: classes in `Z[L]` and finite-field point counts;
//! * [`roofs`]: the roof catalog, Koszul cohomology of zero loci and
//!   L-equivalence reports;
//! * [`cli`]: the `roofcalc` command-line front end.

pub mod bwb;
pub mod cli;
pub mod error;
pub mod motive;
pub mod reps;
pub mod roofs;
pub mod rootsys;
pub mod serde_big;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanType, RootSystem, Weight};
pub use weyl::{ParabolicSubgroup, WeylElement, DEFAULT_CAP};
