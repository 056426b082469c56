//! Classical ciphers, coincidence statistics and the Friedman attack.

mod alphabet;
mod bridge;
mod coincidence;
mod friedman;
mod registry;
mod route;
mod transposition;
mod vigenere;

use thiserror::Error;

pub use alphabet::Alphabet;
pub use bridge::{
    brauer_ioc, check_theorem_permutation, check_theorem_v1, check_theorem_v2, transposition_to_config,
    vigenere_to_config, DimensionVerdict, PermutationVerdict,
};
pub use coincidence::{
    coincidence_report, decimate, index_of_coincidence, mutual_index, mutual_index_shift, Coincidence,
    CoincidenceReport, MicRow,
};
pub use friedman::{
    chi_squared, friedman_keylength, friedman_recover_key, solve_differences, KeyCandidate, KeyRecovery,
    KeylengthCandidate, PairShift, ENGLISH_FREQUENCIES, FLAG_WINDOW, MULTIPLE_MARGIN, TARGET_IOC,
};
pub use registry::{Cipher, CipherRegistry, RouteCipher, TranspositionCipher, VigenereCipher};
pub use route::{route_read, route_write, Grid, RouteSpec};
pub use transposition::{transposition_decrypt, transposition_encrypt, BlockPermutation};
pub use vigenere::{vigenere_decrypt, vigenere_encrypt, VigenereKey};

use crate::brauer::BrauerError;
use crate::perm::PermutationError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CipherError {
    #[error("character {ch:?} at offset {offset} is not in the alphabet")]
    OutOfAlphabet { ch: char, offset: usize },
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("alphabet repeats {0:?}")]
    DuplicateSymbol(char),
    #[error("key is empty")]
    EmptyKey,
    #[error("key residue {residue} is not below the alphabet size {n}")]
    ResidueOutOfRange { residue: u32, n: u32 },
    #[error("invalid key: {0}")]
    InvalidKey(String),
    #[error("block lengths do not match: {0}")]
    LengthMismatch(String),
    #[error("invalid route: {0}")]
    InvalidRoute(String),
    #[error("text of length {len} is too short; at least {min} characters are needed")]
    TooShort { len: usize, min: usize },
    #[error("difference system is inconsistent: k{j} - k{i} should be {expected}, the equations force {forced}")]
    InconsistentDifferences {
        i: usize,
        j: usize,
        expected: u32,
        forced: u32,
    },
    #[error(transparent)]
    Permutation(#[from] PermutationError),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
}
