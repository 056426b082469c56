//! Brauer configurations, their quivers and closed-form invariants.

mod config;
mod format;
mod invariants;
mod multiset;
mod quiver;

use thiserror::Error;

pub use config::{BrauerConfiguration, Occurrence, Polygon, SuccessorSequence, VertexId};
pub use format::{parse_config, parse_profile, write_config, write_profile};
pub use invariants::{
    center_formula, check_prop_v3, dim_center, dim_lambda, invariants, is_connected, AlgebraInvariants,
    SingleOccurrenceVerdict, ValencyProfile,
};
pub use multiset::{frequencies, multiset_intersection, multiset_union, Multiset};
pub use quiver::{build_quiver, Arrow, Quiver};

use crate::perm::PermutationError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("vertex label is empty")]
    EmptyLabel,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),
    #[error("unknown polygon {0}")]
    UnknownPolygon(usize),
    #[error("polygon {polygon} has {len} occurrence(s); at least 2 are required")]
    PolygonTooShort { polygon: usize, len: usize },
    #[error("polygon {polygon} has a label of length {label} for a word of length {word}")]
    LabelLength { polygon: usize, label: usize, word: usize },
    #[error("configuration is disconnected; components by polygon: {}", fmt_components(.components))]
    Disconnected { components: Vec<Vec<usize>> },
    #[error("vertex `{vertex}` occurs {frequency} times in polygon {polygon}; expected at most once")]
    HypothesisViolated {
        polygon: usize,
        vertex: VertexId,
        frequency: usize,
    },
    #[error("invalid valency profile: {0}")]
    InvalidProfile(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Label {
        line: usize,
        #[source]
        source: PermutationError,
    },
}

fn fmt_components(components: &[Vec<usize>]) -> String {
    components
        .iter()
        .map(|c| format!("{c:?}"))
        .collect::<Vec<_>>()
        .join(", ")
}
