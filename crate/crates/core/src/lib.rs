//! Decomposition of finitely generated commutative semigroups.
//!
//! A semigroup given by a generator matrix (optionally with torsion rows) is
//! split into irreducible direct summands by bringing its kernel lattice into
//! HNF-diagonal form. Toric-ideal data (Markov bases, Betti degrees,
//! uniqueness, complete intersection, gluing) is then computed per summand
//! and reassembled.

pub mod decompose;
pub mod error;
pub mod fibers;
pub mod linalg;
pub mod presentation;
pub mod toric;
mod union_find;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, LatticeBasis, Permutation};
pub use presentation::SemigroupPresentation;
