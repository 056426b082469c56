//! Brauer configuration algebras built from ciphertexts and music scores.

pub mod brauer;
pub mod cipher;
pub mod graph;
pub mod perm;
pub mod score;

pub use brauer::{AlgebraInvariants, BrauerConfiguration, BrauerError, VertexId};
pub use perm::{Permutation, PermutationError};
