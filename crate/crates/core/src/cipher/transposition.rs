use crate::perm::Permutation;

use super::CipherError;

/// Per-block permutations for the block transposition cipher
/// `e_K(x) = e_{π_1}(x_1) e_{π_2}(x_2) …`.
///
/// A single permutation is reused for every block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPermutation {
    perms: Vec<Permutation>,
}

impl BlockPermutation {
    pub fn new(perms: Vec<Permutation>) -> Result<Self, CipherError> {
        if perms.is_empty() {
            return Err(CipherError::EmptyKey);
        }
        Ok(Self { perms })
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// Parses `"3 4 1 2"` or several `;`-separated permutations, one per block.
    pub fn parse(key: &str) -> Result<Self, CipherError> {
        let perms = key
            .split(';')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<Permutation>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(perms)
    }

    /// The permutation for each block of a text of length `len`.
    pub fn schedule(&self, len: usize) -> Result<Vec<&Permutation>, CipherError> {
        if self.perms.len() == 1 {
            let s = self.perms[0].len();
            if !len.is_multiple_of(s) {
                return Err(CipherError::LengthMismatch(format!(
                    "text length {len} is not a multiple of the block size {s}"
                )));
            }
            return Ok(vec![&self.perms[0]; len / s]);
        }
        let total: usize = self.perms.iter().map(Permutation::len).sum();
        if total != len {
            return Err(CipherError::LengthMismatch(format!(
                "blocks cover {total} characters, text has {len}"
            )));
        }
        Ok(self.perms.iter().collect())
    }

    pub fn block_sizes(&self, len: usize) -> Result<Vec<usize>, CipherError> {
        Ok(self.schedule(len)?.into_iter().map(Permutation::len).collect())
    }

    pub fn inverse(&self) -> Self {
        Self {
            perms: self.perms.iter().map(Permutation::inverse).collect(),
        }
    }
}

fn apply_blocks<T: Clone>(text: &[T], key: &BlockPermutation) -> Result<Vec<T>, CipherError> {
    let mut out = Vec::with_capacity(text.len());
    let mut start = 0;
    for pi in key.schedule(text.len())? {
        out.extend(pi.apply(&text[start..start + pi.len()]));
        start += pi.len();
    }
    Ok(out)
}

pub fn transposition_encrypt<T: Clone>(text: &[T], key: &BlockPermutation) -> Result<Vec<T>, CipherError> {
    apply_blocks(text, key)
}

/// Applies `π⁻¹` block by block.
pub fn transposition_decrypt<T: Clone>(text: &[T], key: &BlockPermutation) -> Result<Vec<T>, CipherError> {
    apply_blocks(text, &key.inverse())
}
