//! Binomial ideals of semigroups: Gröbner bases, lattice-ideal generators,
//! minimal Markov bases, Graver bases, and the uniqueness and
//! complete-intersection checks.

mod binomial;
mod graver;
mod groebner;
mod lattice_ideal;
mod markov;
mod order;

pub use binomial::{sdegree, Binomial};
pub use graver::{default_graver_cap, graver_basis};
pub use groebner::{buchberger, groebner_basis, GroebnerBasis, OrientedBinomial};
pub use lattice_ideal::{basis_binomials, lattice_ideal_gens, saturate};
pub use markov::{
    assemble_decomposed, betti_degrees, is_complete_intersection, is_unique_markov,
    is_unique_markov_with, markov_basis, markov_basis_decomposed, minimal_markov,
    minimal_markov_with, MarkovBasis,
};
pub use order::{OrderKind, TermOrder};
