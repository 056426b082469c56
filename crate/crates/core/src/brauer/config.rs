use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::BrauerError;
use crate::perm::Permutation;

/// A vertex of a Brauer configuration, identified by its label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self, BrauerError> {
        let label = label.into();
        if label.is_empty() {
            return Err(BrauerError::EmptyLabel);
        }
        Ok(Self(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One polygon: an ordered word of vertex occurrences, optionally labeled by a
/// permutation of its positions. The label is carried as metadata only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    index: usize,
    word: Vec<VertexId>,
    label: Option<Permutation>,
}

impl Polygon {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn word(&self) -> &[VertexId] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn label(&self) -> Option<&Permutation> {
        self.label.as_ref()
    }

    /// Occurrences of `v` in this polygon.
    pub fn frequency(&self, v: &VertexId) -> usize {
        self.word.iter().filter(|w| *w == v).count()
    }

    /// The word with the labeling permutation applied, or the plain word.
    pub fn labeled_word(&self) -> Vec<VertexId> {
        match &self.label {
            Some(pi) => pi.apply(&self.word),
            None => self.word.clone(),
        }
    }
}

/// Position of one vertex occurrence: polygon index, then position in its word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Occurrence {
    pub polygon: usize,
    pub position: usize,
}

/// The linearly ordered occurrences of one vertex. Closed into a circular
/// order when the quiver is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccessorSequence {
    pub vertex: VertexId,
    pub entries: Vec<Occurrence>,
}

impl SuccessorSequence {
    /// Polygon indices in successor order, repetitions kept.
    pub fn polygons(&self) -> Vec<usize> {
        self.entries.iter().map(|o| o.polygon).collect()
    }
}

/// A Brauer configuration: an ordered list of polygons over a vertex set.
/// Polygon order is the orientation used for every successor sequence.
///
/// Multiplicity is fixed by valency: `μ(v) = 2` when `val(v) = 1`, else `1`.
#[derive(Debug, Clone)]
pub struct BrauerConfiguration {
    polygons: Vec<Polygon>,
    vertices: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    occurrences: Vec<Vec<Occurrence>>,
}

impl PartialEq for BrauerConfiguration {
    fn eq(&self, other: &Self) -> bool {
        self.polygons == other.polygons
    }
}

impl Eq for BrauerConfiguration {}

impl BrauerConfiguration {
    pub fn new(words: Vec<Vec<VertexId>>) -> Result<Self, BrauerError> {
        Self::with_labels(words.into_iter().map(|w| (w, None)).collect())
    }

    pub fn with_labels(polygons: Vec<(Vec<VertexId>, Option<Permutation>)>) -> Result<Self, BrauerError> {
        let mut built = Vec::with_capacity(polygons.len());
        for (index, (word, label)) in polygons.into_iter().enumerate() {
            if word.len() < 2 {
                return Err(BrauerError::PolygonTooShort {
                    polygon: index,
                    len: word.len(),
                });
            }
            if let Some(pi) = &label {
                if pi.len() != word.len() {
                    return Err(BrauerError::LabelLength {
                        polygon: index,
                        label: pi.len(),
                        word: word.len(),
                    });
                }
            }
            built.push(Polygon { index, word, label });
        }

        let mut vertices = Vec::new();
        let mut index = HashMap::new();
        let mut occurrences: Vec<Vec<Occurrence>> = Vec::new();
        for polygon in &built {
            for (position, v) in polygon.word.iter().enumerate() {
                let slot = *index.entry(v.clone()).or_insert_with(|| {
                    vertices.push(v.clone());
                    occurrences.push(Vec::new());
                    vertices.len() - 1
                });
                occurrences[slot].push(Occurrence {
                    polygon: polygon.index,
                    position,
                });
            }
        }

        Ok(Self {
            polygons: built,
            vertices,
            index,
            occurrences,
        })
    }

    /// Builds a configuration from string words whose letters are vertices,
    /// e.g. `["OEXBDK", "OLFWD"]`.
    pub fn from_char_words<S: AsRef<str>>(words: &[S]) -> Result<Self, BrauerError> {
        let words = words
            .iter()
            .map(|w| {
                w.as_ref()
                    .chars()
                    .map(|c| VertexId::new(c.to_string()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(words)
    }

    /// Builds a configuration from words of string labels.
    pub fn from_label_words<S: AsRef<str>>(words: &[Vec<S>]) -> Result<Self, BrauerError> {
        let words = words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|s| VertexId::new(s.as_ref()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(words)
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn polygon_count(&self) -> usize {
        self.polygons.len()
    }

    /// Vertices in order of first appearance.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.index.contains_key(v)
    }

    fn slot(&self, v: &VertexId) -> Result<usize, BrauerError> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| BrauerError::UnknownVertex(v.clone()))
    }

    pub fn valency(&self, v: &VertexId) -> Result<usize, BrauerError> {
        Ok(self.occurrences[self.slot(v)?].len())
    }

    pub fn multiplicity(&self, v: &VertexId) -> Result<usize, BrauerError> {
        self.valency(v).map(multiplicity_for)
    }

    pub fn successor_sequence(&self, v: &VertexId) -> Result<SuccessorSequence, BrauerError> {
        let slot = self.slot(v)?;
        Ok(SuccessorSequence {
            vertex: v.clone(),
            entries: self.occurrences[slot].clone(),
        })
    }

    /// `(vertex, valency)` pairs in vertex order.
    pub fn valencies(&self) -> impl Iterator<Item = (&VertexId, usize)> + '_ {
        self.vertices
            .iter()
            .zip(&self.occurrences)
            .map(|(v, occ)| (v, occ.len()))
    }

    pub(crate) fn occurrences_of_slot(&self, slot: usize) -> &[Occurrence] {
        &self.occurrences[slot]
    }

    /// Connected components of the polygon/vertex incidence graph, as sorted
    /// lists of polygon indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.polygons.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for occ in &self.occurrences {
            let first = occ[0].polygon;
            for o in &occ[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, o.polygon));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_slot: HashMap<usize, usize> = HashMap::new();
        for p in 0..self.polygons.len() {
            let r = find(&mut parent, p);
            let slot = *root_slot.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[slot].push(p);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The configuration with polygon `index` removed; later polygons shift down.
    pub fn without_polygon(&self, index: usize) -> Result<Self, BrauerError> {
        if index >= self.polygons.len() {
            return Err(BrauerError::UnknownPolygon(index));
        }
        Self::with_labels(
            self.polygons
                .iter()
                .filter(|p| p.index != index)
                .map(|p| (p.word.clone(), p.label.clone()))
                .collect(),
        )
    }

    /// Concatenation of the polygon words, labels applied.
    pub fn message(&self) -> Vec<VertexId> {
        self.polygons.iter().flat_map(|p| p.labeled_word()).collect()
    }
}

pub(crate) fn multiplicity_for(valency: usize) -> usize {
    if valency == 1 {
        2
    } else {
        1
    }
}
