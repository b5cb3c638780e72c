//! Exact computational Lie theory for compact simple Lie algebras: root
//! systems in Bourbaki order, Weyl-group combinatorics, weight multiplicities
//! and tensor products, and a catalog of restriction matrices for branching
//! irreducible representations to the fixed-point subalgebras of
//! automorphisms (folding quotients, Levi subalgebras of parabolics, and
//! maximal equal-rank subalgebras from the extended Dynkin diagram).
//!
//! All arithmetic is exact: machine integers for weights and roots, explicit
//! denominators for the bilinear form and torus coordinates, and big integers
//! for dimensions.
//!
//! The `parallel` feature (on by default) parallelizes the weight-multiset
//! and branching inner loops with rayon; disable it for a fully sequential
//! build with identical results.

pub mod error;
pub mod reps;
pub mod rootsys;
pub mod rules;
pub mod types;
pub mod weyl;

pub use error::{LieError, Result};
pub use types::{Family, LieType, Rational, RootVec, SimpleLieType, Weight};
