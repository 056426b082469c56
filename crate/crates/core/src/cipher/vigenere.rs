use std::fmt;

use super::{Alphabet, CipherError};

/// A key `(k_1, …, k_m)` of residues modulo the alphabet size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VigenereKey {
    residues: Vec<u32>,
}

impl VigenereKey {
    pub fn new(residues: Vec<u32>, alphabet: &Alphabet) -> Result<Self, CipherError> {
        if residues.is_empty() {
            return Err(CipherError::EmptyKey);
        }
        let n = alphabet.len();
        if let Some(&residue) = residues.iter().find(|&&r| r >= n) {
            return Err(CipherError::ResidueOutOfRange { residue, n });
        }
        Ok(Self { residues })
    }

    /// Reads a key word such as `"MDPI"`.
    pub fn from_word(word: &str, alphabet: &Alphabet) -> Result<Self, CipherError> {
        Self::new(alphabet.encode(word.trim())?, alphabet)
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn to_word(&self, alphabet: &Alphabet) -> String {
        alphabet.decode(&self.residues)
    }
}

impl fmt::Display for VigenereKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn shift(text: &str, key: &VigenereKey, alphabet: &Alphabet, sign: i64) -> Result<String, CipherError> {
    let n = alphabet.len() as i64;
    let out: Vec<u32> = alphabet
        .encode(text)?
        .into_iter()
        .zip(key.residues.iter().cycle())
        .map(|(x, &k)| (x as i64 + sign * k as i64).rem_euclid(n) as u32)
        .collect();
    Ok(alphabet.decode(&out))
}

/// `y_i = x_i + k_{i mod m}`.
pub fn vigenere_encrypt(plain: &str, key: &VigenereKey, alphabet: &Alphabet) -> Result<String, CipherError> {
    shift(plain, key, alphabet, 1)
}

pub fn vigenere_decrypt(cipher: &str, key: &VigenereKey, alphabet: &Alphabet) -> Result<String, CipherError> {
    shift(cipher, key, alphabet, -1)
}
