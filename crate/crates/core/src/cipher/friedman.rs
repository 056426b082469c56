use serde::{Serialize, Serializer};

use super::coincidence::{argmax, decimate, index_of_coincidence, mutual_index_shift, Coincidence};
use super::CipherError;

/// Expected index of coincidence of English text.
pub const TARGET_IOC: f64 = 0.065;

/// A key length is flagged when the mean per-list IoC is within this
/// distance of [`TARGET_IOC`].
pub const FLAG_WINDOW: f64 = 0.01;

/// A multiple of a flagged length counts as a mere multiple unless its mean
/// IoC beats the shorter length's by at least this much. A true key length
/// splits cleanly, while its divisors mix several shifts per list and fall
/// short of the target.
pub const MULTIPLE_MARGIN: f64 = FLAG_WINDOW / 2.0;

/// English letter probabilities for `A..=Z`.
pub const ENGLISH_FREQUENCIES: [f64; 26] = [
    0.082, 0.015, 0.028, 0.043, 0.127, 0.022, 0.020, 0.061, 0.070, 0.002, 0.008, 0.040, 0.024, 0.067, 0.075, 0.019,
    0.001, 0.060, 0.063, 0.091, 0.028, 0.010, 0.023, 0.001, 0.020, 0.001,
];

fn values<S: Serializer>(list: &[Coincidence], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(list.iter().map(Coincidence::value))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KeylengthCandidate {
    pub m: usize,
    #[serde(rename = "perListIoC", serialize_with = "values")]
    pub per_list_ioc: Vec<Coincidence>,
    /// Mean distance of the per-list IoC from [`TARGET_IOC`]; lower is better.
    pub score: f64,
    pub flagged: bool,
    /// Smallest flagged proper divisor this length does not clearly beat.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiple_of: Option<usize>,
}

impl KeylengthCandidate {
    pub fn mean_ioc(&self) -> f64 {
        self.per_list_ioc.iter().map(Coincidence::value).sum::<f64>() / self.per_list_ioc.len() as f64
    }
}

/// Scores every key length `1..=max_len` and ranks them.
///
/// Lengths that are multiples of a flagged shorter length, without a clearly
/// higher mean IoC (see [`MULTIPLE_MARGIN`]), are reported with `multiple_of`
/// set and ranked after all other lengths.
pub fn friedman_keylength(cipher: &[u32], max_len: usize) -> Result<Vec<KeylengthCandidate>, CipherError> {
    if max_len == 0 {
        return Err(CipherError::InvalidKey("maximum key length must be positive".into()));
    }
    if cipher.len() < 2 * max_len {
        return Err(CipherError::TooShort {
            len: cipher.len(),
            min: 2 * max_len,
        });
    }
    let mut candidates: Vec<KeylengthCandidate> = Vec::with_capacity(max_len);
    for m in 1..=max_len {
        let per_list_ioc = decimate(cipher, m)
            .iter()
            .map(|l| index_of_coincidence(l))
            .collect::<Result<Vec<_>, _>>()?;
        let score = per_list_ioc.iter().map(|c| (c.value() - TARGET_IOC).abs()).sum::<f64>() / m as f64;
        let mut candidate = KeylengthCandidate {
            m,
            per_list_ioc,
            score,
            flagged: false,
            multiple_of: None,
        };
        candidate.flagged = (candidate.mean_ioc() - TARGET_IOC).abs() <= FLAG_WINDOW;
        let mean = candidate.mean_ioc();
        candidate.multiple_of = candidates
            .iter()
            .find(|d| d.flagged && m % d.m == 0 && mean < d.mean_ioc() + MULTIPLE_MARGIN)
            .map(|d| d.m);
        candidates.push(candidate);
    }
    candidates.sort_by(|a, b| {
        (a.multiple_of.is_some(), a.score)
            .partial_cmp(&(b.multiple_of.is_some(), b.score))
            .expect("scores are finite")
            .then(a.m.cmp(&b.m))
    });
    Ok(candidates)
}

/// Solves `k_j − k_i ≡ value (mod n)` for every `(i, j, value)`, with `k_0`
/// fixed to `anchor`.
pub fn solve_differences(
    m: usize,
    n: u32,
    anchor: u32,
    equations: &[(usize, usize, u32)],
) -> Result<Vec<u32>, CipherError> {
    let mut key: Vec<Option<u32>> = vec![None; m];
    key[0] = Some(anchor % n);
    // Propagate until nothing changes; m is small.
    let mut changed = true;
    while changed {
        changed = false;
        for &(i, j, value) in equations {
            if i >= m || j >= m {
                return Err(CipherError::InvalidKey(format!(
                    "equation refers to k{} beyond length {m}",
                    i.max(j)
                )));
            }
            match (key[i], key[j]) {
                (Some(ki), None) => {
                    key[j] = Some((ki + value) % n);
                    changed = true;
                }
                (None, Some(kj)) => {
                    key[i] = Some((kj + n - value % n) % n);
                    changed = true;
                }
                (Some(ki), Some(kj)) => {
                    let forced = (kj + n - ki) % n;
                    if forced != value % n {
                        return Err(CipherError::InconsistentDifferences {
                            i,
                            j,
                            expected: value % n,
                            forced,
                        });
                    }
                }
                (None, None) => {}
            }
        }
    }
    key.iter()
        .enumerate()
        .map(|(i, k)| k.ok_or_else(|| CipherError::InvalidKey(format!("k{i} is not determined by the equations"))))
        .collect()
}

/// `Σ (observed − expected)² / expected` over the alphabet.
pub fn chi_squared(text: &[u32], expected: &[f64]) -> f64 {
    let mut observed = vec![0u64; expected.len()];
    for &x in text {
        observed[x as usize] += 1;
    }
    let total = text.len() as f64;
    observed
        .iter()
        .zip(expected)
        .filter(|(_, &p)| p > 0.0)
        .map(|(&o, &p)| {
            let e = total * p;
            (o as f64 - e).powi(2) / e
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairShift {
    pub i: usize,
    pub j: usize,
    /// Shift maximizing the mutual index; estimates `k_i − k_j`.
    pub shift: u32,
    pub mic: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KeyCandidate {
    pub residues: Vec<u32>,
    pub chi2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KeyRecovery {
    pub pair_shifts: Vec<PairShift>,
    /// Pairs whose best shift disagrees with the solved key.
    pub inconsistent: Vec<PairShift>,
    /// All `n` completions of the difference system, best fit first.
    pub candidates: Vec<KeyCandidate>,
}

/// Recovers a key of length `m` from pairwise mutual-index shifts.
///
/// The most confident shifts (highest peak mutual index) form a spanning tree
/// that fixes every `k_j − k_0`; the remaining pairs are checked against it.
/// The `n` choices of `k_0` are ranked by the chi-squared fit of the decryption
/// against `expected` letter frequencies.
pub fn friedman_recover_key(cipher: &[u32], m: usize, n: u32, expected: &[f64]) -> Result<KeyRecovery, CipherError> {
    if m == 0 {
        return Err(CipherError::EmptyKey);
    }
    if expected.len() != n as usize {
        return Err(CipherError::InvalidKey(format!(
            "{} expected frequencies for an alphabet of {n}",
            expected.len()
        )));
    }
    if cipher.len() < 2 * m {
        return Err(CipherError::TooShort {
            len: cipher.len(),
            min: 2 * m,
        });
    }
    let lists = decimate(cipher, m);
    let mut pair_shifts = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let values = (0..n)
                .map(|s| mutual_index_shift(&lists[i], &lists[j], s, n))
                .collect::<Result<Vec<_>, _>>()?;
            let shift = argmax(&values);
            pair_shifts.push(PairShift {
                i,
                j,
                shift,
                mic: values[shift as usize].value(),
            });
        }
    }

    // Prim's algorithm on peak mutual index.
    let mut in_tree = vec![false; m];
    in_tree[0] = true;
    let mut equations = Vec::with_capacity(m.saturating_sub(1));
    for _ in 1..m {
        let best = pair_shifts
            .iter()
            .filter(|p| in_tree[p.i] != in_tree[p.j])
            .fold(None::<&PairShift>, |best, p| match best {
                Some(b) if b.mic >= p.mic => Some(b),
                _ => Some(p),
            })
            .expect("complete graph has a crossing edge");
        // shift = k_i − k_j, i.e. k_j − k_i = −shift
        equations.push((best.i, best.j, (n - best.shift) % n));
        in_tree[best.i] = true;
        in_tree[best.j] = true;
    }
    let offsets = solve_differences(m, n, 0, &equations)?;
    let inconsistent = pair_shifts
        .iter()
        .filter(|p| (offsets[p.i] + n - offsets[p.j]) % n != p.shift)
        .cloned()
        .collect();

    let mut candidates: Vec<KeyCandidate> = (0..n)
        .map(|k0| {
            let residues: Vec<u32> = offsets.iter().map(|d| (d + k0) % n).collect();
            let plain: Vec<u32> = cipher
                .iter()
                .zip(residues.iter().cycle())
                .map(|(&c, &k)| (c + n - k) % n)
                .collect();
            KeyCandidate {
                chi2: chi_squared(&plain, expected),
                residues,
            }
        })
        .collect();
    candidates.sort_by(|a, b| a.chi2.total_cmp(&b.chi2).then_with(|| a.residues.cmp(&b.residues)));
    Ok(KeyRecovery {
        pair_shifts,
        inconsistent,
        candidates,
    })
}
