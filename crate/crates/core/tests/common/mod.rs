//! Independent reference computations shared by the integration tests. They
//! work from raw words and counts only, never from the library's own
//! formulas.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;

/// Occurrence count of each vertex in each polygon: `vertex -> [f_0, f_1, …]`.
pub fn frequency_table<T: Ord + Clone>(words: &[Vec<T>]) -> BTreeMap<T, Vec<usize>> {
    let mut table: BTreeMap<T, Vec<usize>> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        for x in w {
            table.entry(x.clone()).or_insert_with(|| vec![0; words.len()])[i] += 1;
        }
    }
    table
}

/// Loops per vertex: `Σ (f − 1)` over the polygons holding a vertex that
/// spans several polygons, `f` for a vertex confined to one polygon, and 1
/// for a vertex of valency 1.
pub fn loops_oracle<T: Ord + Clone>(words: &[Vec<T>]) -> usize {
    frequency_table(words)
        .values()
        .map(|fs| {
            let held: Vec<usize> = fs.iter().copied().filter(|&f| f > 0).collect();
            let val: usize = held.iter().sum();
            if val == 1 {
                1
            } else if held.len() == 1 {
                held[0]
            } else {
                held.iter().map(|f| f - 1).sum()
            }
        })
        .sum()
}

fn mu(val: u64) -> u64 {
    if val == 1 {
        2
    } else {
        1
    }
}

pub fn dim_lambda_oracle<T: Ord + Clone>(words: &[Vec<T>]) -> u64 {
    let vals = frequency_table(words)
        .into_values()
        .map(|fs| fs.iter().sum::<usize>() as u64);
    2 * words.len() as u64 + vals.map(|v| v * (v * mu(v) - 1)).sum::<u64>()
}

pub fn dim_center_oracle<T: Ord + Clone>(words: &[Vec<T>]) -> i64 {
    let vals: Vec<u64> = frequency_table(words)
        .into_values()
        .map(|fs| fs.iter().sum::<usize>() as u64)
        .collect();
    let singletons = vals.iter().filter(|&&v| v == 1).count() as i64;
    1 + words.len() as i64 - vals.len() as i64
        + vals.iter().map(|&v| mu(v) as i64).sum::<i64>()
        + loops_oracle(words) as i64
        - singletons
}

/// Letter frequencies of English text, in percent (A–Z). Kept separate from
/// the table the attack uses for scoring.
pub const ENGLISH: [f64; 26] = [
    8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966, 0.153, 0.772, 4.025, 2.406, 6.749, 7.507, 1.929,
    0.095, 5.987, 6.327, 9.056, 2.758, 0.978, 2.360, 0.150, 1.974, 0.074,
];

/// Residues drawn independently from [`ENGLISH`].
pub fn english_sample<R: Rng>(rng: &mut R, len: usize) -> Vec<u32> {
    let total: f64 = ENGLISH.iter().sum();
    (0..len)
        .map(|_| {
            let mut t = rng.gen::<f64>() * total;
            for (i, w) in ENGLISH.iter().enumerate() {
                if t < *w {
                    return i as u32;
                }
                t -= w;
            }
            25
        })
        .collect()
}

pub fn to_text(residues: &[u32]) -> String {
    residues.iter().map(|&r| (b'A' + r as u8) as char).collect()
}

/// Plain-arithmetic Vigenère, for generating attack inputs.
pub fn shift_encrypt(plain: &[u32], key: &[u32]) -> Vec<u32> {
    plain
        .iter()
        .enumerate()
        .map(|(i, &p)| (p + key[i % key.len()]) % 26)
        .collect()
}

/// Position lists `y_1..y_m` of a text.
pub fn split<T: Clone>(text: &[T], m: usize) -> Vec<Vec<T>> {
    (0..m)
        .map(|i| text.iter().skip(i).step_by(m).cloned().collect())
        .collect()
}

/// `Σ f(f − 1)` over the characters of a text.
pub fn coincident_pairs<T: Ord + Clone>(text: &[T]) -> u64 {
    frequency_table(&[text.to_vec()])
        .into_values()
        .map(|fs| (fs[0] * (fs[0] - 1)) as u64)
        .sum()
}
