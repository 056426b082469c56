use std::collections::HashMap;

use super::CipherError;

/// An ordered symbol set; a symbol's index is its residue modulo the size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    index: HashMap<char, u32>,
}

impl Default for Alphabet {
    /// `A..=Z`.
    fn default() -> Self {
        Self::new(('A'..='Z').collect()).expect("latin alphabet is valid")
    }
}

impl Alphabet {
    pub fn new(symbols: Vec<char>) -> Result<Self, CipherError> {
        if symbols.is_empty() {
            return Err(CipherError::EmptyAlphabet);
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, &c) in symbols.iter().enumerate() {
            if index.insert(c, i as u32).is_some() {
                return Err(CipherError::DuplicateSymbol(c));
            }
        }
        Ok(Self { symbols, index })
    }

    pub fn len(&self) -> u32 {
        self.symbols.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    /// Looks a character up exactly, then by its uppercase and lowercase forms.
    pub fn residue(&self, c: char) -> Option<u32> {
        self.index
            .get(&c)
            .or_else(|| self.index.get(&c.to_ascii_uppercase()))
            .or_else(|| self.index.get(&c.to_ascii_lowercase()))
            .copied()
    }

    pub fn symbol(&self, residue: u32) -> char {
        self.symbols[(residue % self.len()) as usize]
    }

    /// Converts text to residues; `offset` in the error is a character offset.
    pub fn encode(&self, text: &str) -> Result<Vec<u32>, CipherError> {
        text.chars()
            .enumerate()
            .map(|(offset, ch)| self.residue(ch).ok_or(CipherError::OutOfAlphabet { ch, offset }))
            .collect()
    }

    pub fn decode(&self, residues: &[u32]) -> String {
        residues.iter().map(|&r| self.symbol(r)).collect()
    }

    /// Drops every character that does not fold into the alphabet and
    /// returns the rest in canonical (alphabet) form.
    pub fn strip(&self, text: &str) -> String {
        text.chars()
            .filter_map(|c| self.residue(c))
            .map(|r| self.symbol(r))
            .collect()
    }
}
