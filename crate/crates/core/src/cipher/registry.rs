use std::collections::BTreeMap;

use super::route::{route_read, route_write, RouteSpec};
use super::transposition::{transposition_decrypt, transposition_encrypt, BlockPermutation};
use super::vigenere::{vigenere_decrypt, vigenere_encrypt, VigenereKey};
use super::{Alphabet, CipherError};

/// A text cipher keyed by a textual key.
pub trait Cipher: Send + Sync {
    fn name(&self) -> &'static str;
    fn key_syntax(&self) -> &'static str;
    fn encrypt(&self, text: &str, key: &str) -> Result<String, CipherError>;
    fn decrypt(&self, text: &str, key: &str) -> Result<String, CipherError>;
}

#[derive(Debug, Clone, Default)]
pub struct VigenereCipher {
    alphabet: Alphabet,
}

impl Cipher for VigenereCipher {
    fn name(&self) -> &'static str {
        "vigenere"
    }

    fn key_syntax(&self) -> &'static str {
        "key word, e.g. MDPI"
    }

    fn encrypt(&self, text: &str, key: &str) -> Result<String, CipherError> {
        vigenere_encrypt(text, &VigenereKey::from_word(key, &self.alphabet)?, &self.alphabet)
    }

    fn decrypt(&self, text: &str, key: &str) -> Result<String, CipherError> {
        vigenere_decrypt(text, &VigenereKey::from_word(key, &self.alphabet)?, &self.alphabet)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TranspositionCipher;

impl Cipher for TranspositionCipher {
    fn name(&self) -> &'static str {
        "transposition"
    }

    fn key_syntax(&self) -> &'static str {
        "one-line permutation reused per block (\"3 4 1 2\"), or one per block separated by ';'"
    }

    fn encrypt(&self, text: &str, key: &str) -> Result<String, CipherError> {
        let chars: Vec<char> = text.chars().collect();
        Ok(transposition_encrypt(&chars, &BlockPermutation::parse(key)?)?
            .into_iter()
            .collect())
    }

    fn decrypt(&self, text: &str, key: &str) -> Result<String, CipherError> {
        let chars: Vec<char> = text.chars().collect();
        Ok(transposition_decrypt(&chars, &BlockPermutation::parse(key)?)?
            .into_iter()
            .collect())
    }
}

/// Encrypts by writing the text along the route and reading the grid row by
/// row; decrypts the other way round.
#[derive(Debug, Clone, Copy, Default)]
pub struct RouteCipher;

impl Cipher for RouteCipher {
    fn name(&self) -> &'static str {
        "route"
    }

    fn key_syntax(&self) -> &'static str {
        "<rows>x<cols>:<row-major|col-major|snake-cols|snake-rows>"
    }

    fn encrypt(&self, text: &str, key: &str) -> Result<String, CipherError> {
        let route: RouteSpec = key.parse()?;
        let grid = route_write(text, &route)?;
        route_read(&grid, &RouteSpec::row_major(route.rows(), route.cols()))
    }

    fn decrypt(&self, text: &str, key: &str) -> Result<String, CipherError> {
        let route: RouteSpec = key.parse()?;
        let grid = route_write(text, &RouteSpec::row_major(route.rows(), route.cols()))?;
        route_read(&grid, &route)
    }
}

/// Ciphers available by name.
pub struct CipherRegistry {
    ciphers: BTreeMap<&'static str, Box<dyn Cipher>>,
}

impl Default for CipherRegistry {
    fn default() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(VigenereCipher::default()));
        registry.register(Box::new(TranspositionCipher));
        registry.register(Box::new(RouteCipher));
        registry
    }
}

impl CipherRegistry {
    pub fn empty() -> Self {
        Self {
            ciphers: BTreeMap::new(),
        }
    }

    /// Adds a cipher, replacing any previous one with the same name.
    pub fn register(&mut self, cipher: Box<dyn Cipher>) {
        self.ciphers.insert(cipher.name(), cipher);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Cipher> {
        self.ciphers.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.ciphers.keys().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        let r = CipherRegistry::default();
        assert_eq!(
            r.names().collect::<Vec<_>>(),
            vec!["route", "transposition", "vigenere"]
        );
        assert!(r.get("enigma").is_none());
    }

    #[test]
    fn dispatch_by_name() {
        let r = CipherRegistry::default();
        let v = r.get("vigenere").unwrap();
        assert_eq!(
            v.encrypt("classicalcryptography", "MDPI").unwrap(),
            "OOPAELRIXFGGBWDODDEPK"
        );
        let t = r.get("transposition").unwrap();
        assert_eq!(t.encrypt("CRYPTOGRAPHY", "3 4 1 2").unwrap(), "YPCRGRTOHYAP");
        assert_eq!(t.decrypt("YPCRGRTOHYAP", "3412").unwrap(), "CRYPTOGRAPHY");
    }

    #[test]
    fn route_cipher_round_trip() {
        let route = RouteCipher;
        let c = route.encrypt("CRYPTOGRAPHY", "4x3:snake-cols").unwrap();
        assert_eq!(c, "CRARGPYOHPTY");
        assert_eq!(route.decrypt(&c, "4x3:snake-cols").unwrap(), "CRYPTOGRAPHY");
    }
}
