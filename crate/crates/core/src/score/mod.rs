//! A textual score language and its encoding as Brauer configurations:
//! measures become polygons and note classes become vertices.

mod encode;
mod model;
mod parser;

use thiserror::Error;

pub use encode::{apply_accidental, config_to_message, render_score, score_to_config, step_pitch};
pub use model::{
    Accidental, Clef, Group, GroupKind, Measure, NoteEvent, NoteKind, Score, TimeSignature, EXPONENTS, LETTERS,
};
pub use parser::{parse_score, parse_score_with, ParseOptions};

#[allow(unused_imports)]
pub(crate) use model::letter_index;

use crate::brauer::BrauerError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScoreError {
    #[error("{line}:{col}: unknown token `{token}`")]
    UnknownToken { token: String, line: usize, col: usize },
    #[error("{line}:{col}: a dotted sixty-fourth has no whole-number duration")]
    DottedSixtyFourth { line: usize, col: usize },
    #[error("{line}:{col}: {message}")]
    Header { line: usize, col: usize, message: String },
    #[error("{line}:{col}: unclosed {kind:?} group")]
    UnclosedGroup { kind: GroupKind, line: usize, col: usize },
    #[error("{line}:{col}: unmatched closing {kind:?} group")]
    UnexpectedClose { kind: GroupKind, line: usize, col: usize },
    #[error("measure {measure} (line {line}) lasts {actual} sixty-fourths; the time signature requires {expected}")]
    MeasureDuration {
        measure: usize,
        line: usize,
        expected: u32,
        actual: u32,
    },
    #[error("score has no notes")]
    Empty,
    #[error("measure {measure} has {len} event(s); a polygon needs at least 2")]
    MeasureTooShort { measure: usize, len: usize },
    #[error("`{0}` is not a note-class label")]
    ForeignLabel(String),
    #[error("a rest has no pitch")]
    RestHasNoPitch,
    #[error(transparent)]
    Brauer(#[from] BrauerError),
}
