//! One-line permutations on `{1..n}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("permutation is empty")]
    Empty,
    #[error("entry {value} is outside 1..={len}")]
    OutOfRange { value: usize, len: usize },
    #[error("entry {value} appears more than once")]
    Repeated { value: usize },
    #[error("cannot parse permutation entry `{0}`")]
    Parse(String),
}

/// A bijection on `{1..n}` in one-line notation: `oneline[i] = π(i + 1)`.
///
/// Applying `π` to a word `x` yields `(x_{π(1)}, …, x_{π(n)})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self, PermutationError> {
        if oneline.is_empty() {
            return Err(PermutationError::Empty);
        }
        let len = oneline.len();
        let mut seen = vec![false; len];
        for &value in &oneline {
            if value == 0 || value > len {
                return Err(PermutationError::OutOfRange { value, len });
            }
            if std::mem::replace(&mut seen[value - 1], true) {
                return Err(PermutationError::Repeated { value });
            }
        }
        Ok(Self { oneline })
    }

    pub fn identity(len: usize) -> Self {
        Self {
            oneline: (1..=len).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.oneline.len()
    }

    pub fn is_empty(&self) -> bool {
        self.oneline.is_empty()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { oneline: inv }
    }

    /// Reorders `items` as `(items[π(1)], …, items[π(n)])`.
    ///
    /// Panics if `items.len() != self.len()`.
    pub fn apply<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.len(), "permutation length mismatch");
        self.oneline.iter().map(|&v| items[v - 1].clone()).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.oneline {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    /// Accepts space- or comma-separated entries (`"3 4 1 2"`, `"3,4,1,2"`);
    /// a single run of digits with no separators is read digit by digit (`"3412"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parts: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|p| !p.is_empty())
            .collect();
        let entries: Result<Vec<usize>, _> = if parts.len() == 1 && parts[0].len() > 1 {
            parts[0]
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| PermutationError::Parse(c.to_string()))
                })
                .collect()
        } else {
            parts
                .iter()
                .map(|p| p.parse().map_err(|_| PermutationError::Parse(p.to_string())))
                .collect()
        };
        Self::new(entries?)
    }
}
