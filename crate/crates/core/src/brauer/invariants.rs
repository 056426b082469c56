use std::collections::BTreeMap;

use serde::Serialize;

use super::config::{multiplicity_for, BrauerConfiguration, VertexId};
use super::quiver::build_quiver;
use super::BrauerError;

/// `2·|polygons| + Σ val(m)·(val(m)·μ(m) − 1)`.
pub fn dim_lambda(config: &BrauerConfiguration) -> u64 {
    dim_lambda_from(config.polygon_count(), config.valencies().map(|(_, k)| k))
}

fn dim_lambda_from(polygons: usize, valencies: impl IntoIterator<Item = usize>) -> u64 {
    let sum: u64 = valencies
        .into_iter()
        .map(|k| {
            let k = k as u64;
            let mu = multiplicity_for(k as usize) as u64;
            k * (k * mu - 1)
        })
        .sum();
    2 * polygons as u64 + sum
}

/// `1 + |polygons| − |vertices| + Σ μ(m) + #loops − #{m : val(m) = 1}`.
///
/// Only defined for connected configurations.
pub fn dim_center(config: &BrauerConfiguration) -> Result<u64, BrauerError> {
    let components = config.components();
    if components.len() > 1 {
        return Err(BrauerError::Disconnected { components });
    }
    let loops = build_quiver(config).loop_count;
    let valencies: Vec<usize> = config.valencies().map(|(_, k)| k).collect();
    Ok(dim_center_from(config.polygon_count(), &valencies, loops))
}

fn dim_center_from(polygons: usize, valencies: &[usize], loops: usize) -> u64 {
    let mu_sum: i64 = valencies.iter().map(|&k| multiplicity_for(k) as i64).sum();
    let singletons = valencies.iter().filter(|&&k| k == 1).count() as i64;
    let dim = 1 + polygons as i64 - valencies.len() as i64 + mu_sum + loops as i64 - singletons;
    debug_assert!(dim >= 0, "negative center dimension {dim}");
    dim.max(0) as u64
}

/// The closed form for `dim Z` evaluated without the connectivity check. On a
/// disconnected configuration this is not the center dimension of the
/// algebra (which is the sum over components).
pub fn center_formula(config: &BrauerConfiguration) -> u64 {
    let loops = build_quiver(config).loop_count;
    let valencies: Vec<usize> = config.valencies().map(|(_, k)| k).collect();
    dim_center_from(config.polygon_count(), &valencies, loops)
}

pub fn is_connected(config: &BrauerConfiguration) -> bool {
    config.is_connected()
}

/// Closed-form invariants of the algebra induced by a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraInvariants {
    pub dim_lambda: u64,
    /// `None` when the configuration is disconnected.
    pub dim_center: Option<u64>,
    pub loops: usize,
    #[serde(rename = "polygons")]
    pub polygon_count: usize,
    #[serde(rename = "vertices")]
    pub vertex_count: usize,
    pub valency_histogram: BTreeMap<usize, usize>,
    #[serde(skip)]
    pub mu_sum: u64,
    #[serde(skip_serializing_if = "is_true")]
    pub connected: bool,
    /// The unchecked closed form, present only when disconnected.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center_formula: Option<u64>,
}

fn is_true(b: &bool) -> bool {
    *b
}

impl AlgebraInvariants {
    pub fn singletons(&self) -> usize {
        self.valency_histogram.get(&1).copied().unwrap_or(0)
    }
}

fn histogram(valencies: impl IntoIterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for k in valencies {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

/// Computes every invariant at once. A disconnected configuration still gets
/// its `dim_lambda`; `dim_center` is left empty and `connected` is false.
pub fn invariants(config: &BrauerConfiguration) -> AlgebraInvariants {
    let quiver = build_quiver(config);
    let valencies: Vec<usize> = config.valencies().map(|(_, k)| k).collect();
    let connected = config.is_connected();
    let formula = dim_center_from(config.polygon_count(), &valencies, quiver.loop_count);
    AlgebraInvariants {
        dim_lambda: dim_lambda_from(config.polygon_count(), valencies.iter().copied()),
        dim_center: connected.then_some(formula),
        loops: quiver.loop_count,
        polygon_count: config.polygon_count(),
        vertex_count: config.vertex_count(),
        valency_histogram: histogram(valencies.iter().copied()),
        mu_sum: valencies.iter().map(|&k| multiplicity_for(k) as u64).sum(),
        connected,
        center_formula: (!connected).then_some(formula),
    }
}

/// Outcome of checking `dim Z = m + n + 1` on a configuration whose polygons
/// contain every vertex at most once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SingleOccurrenceVerdict {
    /// Polygon count.
    pub m: usize,
    /// Number of valency-1 vertices.
    pub n: usize,
    pub claimed: u64,
    pub actual: u64,
    pub holds: bool,
}

pub fn check_prop_v3(config: &BrauerConfiguration) -> Result<SingleOccurrenceVerdict, BrauerError> {
    for polygon in config.polygons() {
        let word = polygon.word();
        for (i, v) in word.iter().enumerate() {
            if word[..i].contains(v) {
                return Err(BrauerError::HypothesisViolated {
                    polygon: polygon.index(),
                    vertex: v.clone(),
                    frequency: polygon.frequency(v),
                });
            }
        }
    }
    let actual = dim_center(config)?;
    let m = config.polygon_count();
    let n = config.valencies().filter(|(_, k)| *k == 1).count();
    let claimed = (m + n + 1) as u64;
    Ok(SingleOccurrenceVerdict {
        m,
        n,
        claimed,
        actual,
        holds: claimed == actual,
    })
}

/// The numeric shadow of a configuration: polygon count, valency histogram
/// and loop count. Enough to evaluate both dimension formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ValencyProfile {
    pub polygons: usize,
    pub loops: usize,
    pub histogram: BTreeMap<usize, usize>,
}

impl ValencyProfile {
    pub fn new(polygons: usize, loops: usize, histogram: BTreeMap<usize, usize>) -> Result<Self, BrauerError> {
        let profile = Self {
            polygons,
            loops,
            histogram,
        };
        profile.validate()?;
        Ok(profile)
    }

    pub fn of(config: &BrauerConfiguration) -> Self {
        let inv = invariants(config);
        Self {
            polygons: inv.polygon_count,
            loops: inv.loops,
            histogram: inv.valency_histogram,
        }
    }

    fn validate(&self) -> Result<(), BrauerError> {
        let bad = |reason: String| Err(BrauerError::InvalidProfile(reason));
        if self.polygons == 0 {
            return bad("no polygons".into());
        }
        if self.histogram.contains_key(&0) {
            return bad("valency 0 is not allowed".into());
        }
        let occurrences: usize = self.histogram.iter().map(|(k, c)| k * c).sum();
        if occurrences < 2 * self.polygons {
            return bad(format!(
                "{occurrences} occurrences cannot fill {} polygons of length >= 2",
                self.polygons
            ));
        }
        let singletons = self.singletons();
        if self.loops < singletons {
            return bad(format!(
                "{} loops is fewer than the {singletons} valency-1 vertices",
                self.loops
            ));
        }
        if self.loops > occurrences {
            return bad(format!("{} loops exceeds the {occurrences} arrows", self.loops));
        }
        Ok(())
    }

    pub fn singletons(&self) -> usize {
        self.histogram.get(&1).copied().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.histogram.values().sum()
    }

    fn valencies(&self) -> Vec<usize> {
        self.histogram
            .iter()
            .flat_map(|(&k, &c)| std::iter::repeat_n(k, c))
            .collect()
    }

    pub fn dim_lambda(&self) -> u64 {
        dim_lambda_from(self.polygons, self.valencies())
    }

    /// Assumes the profile comes from a connected configuration.
    pub fn dim_center(&self) -> u64 {
        dim_center_from(self.polygons, &self.valencies(), self.loops)
    }

    pub fn invariants(&self) -> AlgebraInvariants {
        let valencies = self.valencies();
        AlgebraInvariants {
            dim_lambda: self.dim_lambda(),
            dim_center: Some(self.dim_center()),
            loops: self.loops,
            polygon_count: self.polygons,
            vertex_count: valencies.len(),
            valency_histogram: self.histogram.clone(),
            mu_sum: valencies.iter().map(|&k| multiplicity_for(k) as u64).sum(),
            connected: true,
            center_formula: None,
        }
    }

    /// Builds a connected configuration with exactly this profile, using
    /// synthetic vertex labels `v1, v2, …` (largest valency first).
    ///
    /// Each vertex of valency `k >= 2` is spread over `d` distinct polygons,
    /// contributing `k − d` loops (or `k` when `d = 1`). Spreads start maximal
    /// and shrink until the loop target is met, while keeping enough overlap
    /// to chain every polygon together.
    pub fn realize(&self) -> Result<BrauerConfiguration, BrauerError> {
        self.validate()?;
        let p = self.polygons;
        let mut multi: Vec<usize> = self.valencies().into_iter().filter(|&k| k >= 2).collect();
        multi.sort_unstable_by(|a, b| b.cmp(a));
        let singletons = self.singletons();

        let mut spread: Vec<usize> = multi.iter().map(|&k| k.min(p)).collect();
        let min_loops: usize = multi.iter().zip(&spread).map(|(k, d)| k - d).sum();
        let target = self.loops - singletons;
        if target < min_loops {
            return Err(BrauerError::InvalidProfile(format!(
                "at least {} loops are forced, profile has {}",
                min_loops + singletons,
                self.loops
            )));
        }
        let mut need = target - min_loops;
        let mut links: usize = spread.iter().map(|d| d - 1).sum();
        let required_links = p - 1;
        for d in spread.iter_mut() {
            while need > 0 && *d > 2 && links > required_links {
                *d -= 1;
                links -= 1;
                need -= 1;
            }
        }
        for d in spread.iter_mut() {
            if need >= 2 && *d == 2 && links > required_links {
                *d = 1;
                links -= 1;
                need -= 2;
            }
        }
        if need > 0 || links < required_links {
            return Err(BrauerError::InvalidProfile(format!(
                "cannot realize {} loops over {p} polygons",
                self.loops
            )));
        }

        let mut words: Vec<Vec<VertexId>> = vec![Vec::new(); p];
        let mut cursor = 0usize;
        let mut label = 0usize;
        let mut next_label = || {
            label += 1;
            VertexId::new(format!("v{label}")).expect("non-empty")
        };
        for (&k, &d) in multi.iter().zip(&spread) {
            let v = next_label();
            for j in 0..d {
                words[(cursor + j) % p].push(v.clone());
            }
            for _ in d..k {
                words[cursor % p].push(v.clone());
            }
            cursor += d.saturating_sub(1);
        }
        for _ in 0..singletons {
            let v = next_label();
            let shortest = (0..p).min_by_key(|&i| (words[i].len(), i)).expect("p > 0");
            words[shortest].push(v);
        }

        let config = BrauerConfiguration::new(words)
            .map_err(|e| BrauerError::InvalidProfile(format!("realization failed: {e}")))?;
        let realized = ValencyProfile::of(&config);
        if !config.is_connected() || realized != *self {
            return Err(BrauerError::InvalidProfile(format!(
                "realization produced {realized:?}, connected = {}",
                config.is_connected()
            )));
        }
        Ok(config)
    }
}
