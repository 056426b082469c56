//! Brauer configurations induced by ciphertexts.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use super::coincidence::{decimate, index_of_coincidence, Coincidence};
use super::transposition::{transposition_encrypt, BlockPermutation};
use super::CipherError;
use crate::brauer::{dim_center, dim_lambda, invariants, AlgebraInvariants, BrauerConfiguration};

/// Polygons are the `m` decimated lists `y_1, …, y_m`; vertices are characters.
pub fn vigenere_to_config(cipher: &str, m: usize) -> Result<BrauerConfiguration, CipherError> {
    if m == 0 {
        return Err(CipherError::EmptyKey);
    }
    let chars: Vec<char> = cipher.chars().collect();
    let lists: Vec<String> = decimate(&chars, m)
        .into_iter()
        .map(|l| l.into_iter().collect())
        .collect();
    Ok(BrauerConfiguration::from_char_words(&lists)?)
}

/// `(dim Λ − 2m) / (N(N − 1))` for the split into `m` lists. Equals the index
/// of coincidence exactly when no character occurs only once; each singleton
/// adds one to the numerator.
pub fn brauer_ioc(cipher: &str, m: usize) -> Result<Coincidence, CipherError> {
    let config = vigenere_to_config(cipher, m)?;
    let n = cipher.chars().count() as u64;
    if n < 2 {
        return Err(CipherError::TooShort {
            len: n as usize,
            min: 2,
        });
    }
    Ok(Coincidence {
        numerator: dim_lambda(&config) - 2 * m as u64,
        denominator: n * (n - 1),
    })
}

/// Polygons are consecutive blocks of the given sizes.
pub fn transposition_to_config(text: &str, block_sizes: &[usize]) -> Result<BrauerConfiguration, CipherError> {
    let chars: Vec<char> = text.chars().collect();
    let total: usize = block_sizes.iter().sum();
    if total != chars.len() {
        return Err(CipherError::LengthMismatch(format!(
            "blocks cover {total} characters, text has {}",
            chars.len()
        )));
    }
    let mut blocks = Vec::with_capacity(block_sizes.len());
    let mut start = 0;
    for &s in block_sizes {
        blocks.push(chars[start..start + s].iter().collect::<String>());
        start += s;
    }
    Ok(BrauerConfiguration::from_char_words(&blocks)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PermutationVerdict {
    pub ciphertext: String,
    pub block_sizes: Vec<usize>,
    pub plain: AlgebraInvariants,
    pub cipher: AlgebraInvariants,
    pub equal: bool,
}

/// Encrypts `plain` block by block and compares the invariants of the
/// configurations built from plaintext and ciphertext blocks.
pub fn check_theorem_permutation(plain: &str, key: &BlockPermutation) -> Result<PermutationVerdict, CipherError> {
    let chars: Vec<char> = plain.chars().collect();
    let block_sizes = key.block_sizes(chars.len())?;
    let ciphertext: String = transposition_encrypt(&chars, key)?.into_iter().collect();
    let plain_inv = invariants(&transposition_to_config(plain, &block_sizes)?);
    let cipher_inv = invariants(&transposition_to_config(&ciphertext, &block_sizes)?);
    Ok(PermutationVerdict {
        equal: plain_inv == cipher_inv,
        ciphertext,
        block_sizes,
        plain: plain_inv,
        cipher: cipher_inv,
    })
}

/// Both sides of a dimension identity, with the precondition status.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DimensionVerdict {
    pub m: usize,
    pub actual: u64,
    pub claimed: u64,
    pub holds: bool,
    pub precondition_met: bool,
    /// Characters breaking the precondition.
    pub violations: Vec<char>,
}

impl DimensionVerdict {
    pub fn gap(&self) -> i64 {
        self.actual as i64 - self.claimed as i64
    }
}

fn global_frequencies(cipher: &str) -> BTreeMap<char, usize> {
    let mut f = BTreeMap::new();
    for c in cipher.chars() {
        *f.entry(c).or_insert(0) += 1;
    }
    f
}

/// `dim Λ = 2m + N(N − 1)·IoC`, evaluated in exact arithmetic. The identity
/// needs every character to occur at least twice; otherwise the verdict
/// lists the singletons, and the gap equals their number.
pub fn check_theorem_v1(cipher: &str, m: usize) -> Result<DimensionVerdict, CipherError> {
    let config = vigenere_to_config(cipher, m)?;
    let chars: Vec<char> = cipher.chars().collect();
    let n = chars.len() as u64;
    let ioc = index_of_coincidence(&chars)?;
    let pairs = Ratio::from_integer(n * (n - 1)) * ioc.ratio();
    debug_assert!(pairs.is_integer());
    let claimed = 2 * m as u64 + pairs.to_integer();
    let actual = dim_lambda(&config);
    let violations: Vec<char> = global_frequencies(cipher)
        .into_iter()
        .filter(|&(_, f)| f < 2)
        .map(|(c, _)| c)
        .collect();
    Ok(DimensionVerdict {
        m,
        actual,
        claimed,
        holds: actual == claimed,
        precondition_met: violations.is_empty(),
        violations,
    })
}

/// `dim Z = 1 + m + Σ_i Σ_j (f_ij − 1)`, where `f_ij` is the frequency of
/// character `j` in list `y_i`. Needs every character to occur at least twice
/// and in at least two lists.
pub fn check_theorem_v2(cipher: &str, m: usize) -> Result<DimensionVerdict, CipherError> {
    let config = vigenere_to_config(cipher, m)?;
    let actual = dim_center(&config)?;
    let mut per_list_sum = 0u64;
    let mut lists_containing: BTreeMap<char, usize> = BTreeMap::new();
    for polygon in config.polygons() {
        let mut f: BTreeMap<char, u64> = BTreeMap::new();
        for v in polygon.word() {
            let c = v.as_str().chars().next().expect("non-empty label");
            *f.entry(c).or_insert(0) += 1;
        }
        per_list_sum += f.values().map(|x| x - 1).sum::<u64>();
        for c in f.keys() {
            *lists_containing.entry(*c).or_insert(0) += 1;
        }
    }
    let claimed = 1 + m as u64 + per_list_sum;
    let global = global_frequencies(cipher);
    let violations: Vec<char> = global
        .iter()
        .filter(|&(c, &f)| f < 2 || lists_containing[c] < 2)
        .map(|(&c, _)| c)
        .collect();
    Ok(DimensionVerdict {
        m,
        actual,
        claimed,
        holds: actual == claimed,
        precondition_met: violations.is_empty(),
        violations,
    })
}
