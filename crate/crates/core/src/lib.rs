//! Path sets: languages of one-sided infinite walks in pointed labeled
//! graphs, where every state accepts.
//!
//! A [`Presentation`] is any pointed labeled graph; [`minimize`] turns it
//! into a [`PathSet`], whose canonical form makes `==` language equality.
//! On top of that the crate provides decimations and shifts
//! ([`decimation`]), interleavings and interleaving closures
//! ([`interleaving`]), the factorization structure of a path set
//! ([`factorization`]) and a brute-force block-level reference
//! ([`oracle`]).
//!
//! ```
//! use pathset::{fixtures, interleave, minimize, psi};
//!
//! let q0 = minimize(&fixtures::q0());
//! let q1 = minimize(&fixtures::q1());
//! let both = interleave(&[q0.clone(), q1.clone()]);
//! assert_eq!(both.num_vertices(), 6);
//! assert_eq!(psi(&both, 0, 2), q0);
//! assert_eq!(psi(&both, 1, 2), q1);
//! ```

pub mod alphabet;
pub mod cli;
pub mod decimation;
pub mod error;
pub mod factorization;
pub mod fixtures;
pub mod graphfile;
pub mod interleaving;
pub mod oracle;
pub mod pathset;
pub mod presentation;
pub mod relation;

pub use alphabet::{Alphabet, Symbol, WordBlock};
pub use decimation::{
    decimate, full_decimation_set, kernel, position_alphabets, psi, shift, weak_shift_orbit,
    DecimationIndex, FullDecimationSet,
};
pub use error::{Error, Result};
pub use factorization::{
    complete_factorization, factor_set, factorization_exponent, is_leveled, leveled_envelope,
    missing_configuration, self_loop_criterion, FactorizationExponent, FactorizationTree,
    LeveledProfile, MissingConfiguration, NodeStatus,
};
pub use graphfile::GraphFile;
pub use interleaving::{
    interleave, interleave_product, interleaving_closure, interleaving_factors, is_n_factorizable,
};
pub use pathset::{equals, initial_blocks, intersection, minimize, union, word_path_set, PathSet};
pub use presentation::{Edge, Presentation, RawPresentation};
