use std::collections::BTreeMap;

/// A multiset as a frequency map. Keys with frequency zero are never stored.
pub type Multiset<T> = BTreeMap<T, usize>;

/// Per-key maximum of frequencies over the union of keys.
pub fn multiset_union<T: Ord + Clone>(a: &Multiset<T>, b: &Multiset<T>) -> Multiset<T> {
    let mut out = a.clone();
    for (k, &f) in b {
        let e = out.entry(k.clone()).or_insert(0);
        *e = (*e).max(f);
    }
    out.retain(|_, f| *f > 0);
    out
}

/// Per-key minimum of frequencies, restricted to keys present in both.
pub fn multiset_intersection<T: Ord + Clone>(a: &Multiset<T>, b: &Multiset<T>) -> Multiset<T> {
    a.iter()
        .filter_map(|(k, &fa)| {
            let fb = *b.get(k)?;
            let f = fa.min(fb);
            (f > 0).then(|| (k.clone(), f))
        })
        .collect()
}

/// Frequency map of a word.
pub fn frequencies<T: Ord + Clone>(word: &[T]) -> Multiset<T> {
    let mut out = Multiset::new();
    for x in word {
        *out.entry(x.clone()).or_insert(0) += 1;
    }
    out
}
