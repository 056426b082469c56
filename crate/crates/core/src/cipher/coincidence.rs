use std::collections::HashMap;
use std::hash::Hash;

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::CipherError;

/// An exact probability `numerator / denominator`, kept unreduced so the pair
/// counts stay visible (`18/420` rather than `3/70`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coincidence {
    pub numerator: u64,
    pub denominator: u64,
}

impl Coincidence {
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl Serialize for Coincidence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Coincidence", 3)?;
        s.serialize_field("numerator", &self.numerator)?;
        s.serialize_field("denominator", &self.denominator)?;
        s.serialize_field("value", &self.value())?;
        s.end()
    }
}

fn counts<T: Eq + Hash>(text: &[T]) -> HashMap<&T, u64> {
    let mut f = HashMap::new();
    for x in text {
        *f.entry(x).or_insert(0) += 1;
    }
    f
}

/// `Σ f_i(f_i − 1) / (N(N − 1))`.
pub fn index_of_coincidence<T: Eq + Hash>(text: &[T]) -> Result<Coincidence, CipherError> {
    let n = text.len() as u64;
    if n < 2 {
        return Err(CipherError::TooShort {
            len: text.len(),
            min: 2,
        });
    }
    let matches = counts(text).values().map(|f| f * (f - 1)).sum();
    Ok(Coincidence {
        numerator: matches,
        denominator: n * (n - 1),
    })
}

/// `Σ f_i f'_i / (N N')`.
pub fn mutual_index<T: Eq + Hash>(t1: &[T], t2: &[T]) -> Result<Coincidence, CipherError> {
    if t1.is_empty() || t2.is_empty() {
        return Err(CipherError::TooShort { len: 0, min: 1 });
    }
    let f2 = counts(t2);
    let numerator = counts(t1)
        .iter()
        .map(|(x, f)| f * f2.get(x).copied().unwrap_or(0))
        .sum();
    Ok(Coincidence {
        numerator,
        denominator: t1.len() as u64 * t2.len() as u64,
    })
}

/// Mutual index of `t1` and `t2` with every residue of `t2` shifted by `+s`
/// modulo `n`. Peaks at `s = k_i − k_j` when `t1`, `t2` are the `i`-th and
/// `j`-th decimated lists of a Vigenère ciphertext.
pub fn mutual_index_shift(t1: &[u32], t2: &[u32], s: u32, n: u32) -> Result<Coincidence, CipherError> {
    let shifted: Vec<u32> = t2.iter().map(|&x| (x + s) % n).collect();
    mutual_index(t1, &shifted)
}

/// The `m` lists `y_i = (c_i, c_{i+m}, c_{i+2m}, …)`.
pub fn decimate<T: Clone>(text: &[T], m: usize) -> Vec<Vec<T>> {
    assert!(m > 0, "decimation step must be positive");
    let mut lists = vec![Vec::with_capacity(text.len() / m + 1); m];
    for (i, x) in text.iter().enumerate() {
        lists[i % m].push(x.clone());
    }
    lists
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MicRow {
    pub i: usize,
    pub j: usize,
    /// Indexed by shift `0..n`.
    pub values: Vec<Coincidence>,
    pub best_shift: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoincidenceReport {
    pub text_ioc: Coincidence,
    pub per_list_ioc: Vec<Coincidence>,
    pub mic_table: Vec<MicRow>,
}

/// Index of coincidence of the text and of each of its `m` decimated lists,
/// plus every shifted mutual index between pairs of lists.
pub fn coincidence_report(text: &[u32], m: usize, n: u32) -> Result<CoincidenceReport, CipherError> {
    if m == 0 || text.len() < 2 * m {
        return Err(CipherError::TooShort {
            len: text.len(),
            min: 2 * m.max(1),
        });
    }
    let lists = decimate(text, m);
    let per_list_ioc = lists
        .iter()
        .map(|l| index_of_coincidence(l))
        .collect::<Result<Vec<_>, _>>()?;
    let mut mic_table = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let values = (0..n)
                .map(|s| mutual_index_shift(&lists[i], &lists[j], s, n))
                .collect::<Result<Vec<_>, _>>()?;
            let best_shift = argmax(&values);
            mic_table.push(MicRow {
                i,
                j,
                values,
                best_shift,
            });
        }
    }
    Ok(CoincidenceReport {
        text_ioc: index_of_coincidence(text)?,
        per_list_ioc,
        mic_table,
    })
}

/// Smallest index of the largest value.
pub(crate) fn argmax(values: &[Coincidence]) -> u32 {
    let mut best = 0;
    for (s, v) in values.iter().enumerate() {
        if v.ratio() > values[best].ratio() {
            best = s;
        }
    }
    best as u32
}
