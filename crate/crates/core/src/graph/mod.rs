//! Point diagrams drawn from a score: each note class gets a plane point at
//! its first occurrence, and consecutive points are joined into polylines.

mod svg;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::score::{Clef, NoteEvent, Score, LETTERS};

pub use svg::emit_svg;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("score has no notes")]
    Empty,
    #[error("`{0}` is not a pitch letter")]
    Reference(char),
    #[error("edge {i}-{j} references a point outside 0..{points}")]
    UnknownPoint { i: usize, j: usize, points: usize },
    #[error("edge {i}-{j} touches a rest, which has no height")]
    RestEndpoint { i: usize, j: usize },
    #[error("edges line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown orientation `{0}` (expected standard or reversed)")]
    Orientation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    #[default]
    Standard,
    Reversed,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Standard => Orientation::Reversed,
            Orientation::Reversed => Orientation::Standard,
        }
    }

    fn sign(self) -> i32 {
        match self {
            Orientation::Standard => 1,
            Orientation::Reversed => -1,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Standard => "standard",
            Orientation::Reversed => "reversed",
        })
    }
}

impl FromStr for Orientation {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(Orientation::Standard),
            "reversed" => Ok(Orientation::Reversed),
            other => Err(GraphError::Orientation(other.to_string())),
        }
    }
}

/// One note class placed in the plane. Rests have no height.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassPoint {
    pub label: String,
    pub x: usize,
    pub y: Option<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointDiagram {
    pub points: Vec<ClassPoint>,
    pub edges: Vec<(usize, usize)>,
    pub orientation: Orientation,
}

impl PointDiagram {
    /// Points that carry a height.
    pub fn pitched(&self) -> impl Iterator<Item = &ClassPoint> {
        self.points.iter().filter(|p| p.y.is_some())
    }

    /// Mirror image across the reference line.
    pub fn reflected(&self) -> Self {
        Self {
            points: self
                .points
                .iter()
                .map(|p| ClassPoint {
                    y: p.y.map(|y| -y),
                    ..p.clone()
                })
                .collect(),
            edges: self.edges.clone(),
            orientation: self.orientation.flipped(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct PolylineOptions {
    /// Also join consecutive points of equal height.
    pub connect_equal_y: bool,
    /// Hand-drawn connections, added after the automatic ones.
    pub extra_edges: Vec<(usize, usize)>,
}

/// Distinct note classes in order of first appearance.
pub fn classify_notes(score: &Score) -> Result<Vec<NoteEvent>, GraphError> {
    let mut seen = std::collections::HashSet::new();
    let classes: Vec<NoteEvent> = score
        .events()
        .filter(|e| seen.insert(e.class_label()))
        .cloned()
        .collect();
    if classes.is_empty() {
        return Err(GraphError::Empty);
    }
    Ok(classes)
}

/// Places each class at `x` = its ordinal and `y` = its letter offset from
/// `reference` along the clef's ladder. Accidentals and octave are ignored.
pub fn assign_points(
    classes: &[NoteEvent],
    clef: Clef,
    reference: char,
    orientation: Orientation,
) -> Result<PointDiagram, GraphError> {
    let ladder = clef.ladder();
    let height = |c: char| ladder.iter().position(|&l| l == c).map(|p| p as i32);
    let origin = height(reference).ok_or(GraphError::Reference(reference))?;
    let points = classes
        .iter()
        .enumerate()
        .map(|(x, e)| ClassPoint {
            label: e.class_label(),
            x,
            y: e.letter().map(|l| {
                let h = height(l).expect("note letters are on every ladder");
                orientation.sign() * (h - origin)
            }),
        })
        .collect();
    Ok(PointDiagram {
        points,
        edges: Vec::new(),
        orientation,
    })
}

pub fn build_polyline(diagram: &PointDiagram, options: &PolylineOptions) -> Result<PointDiagram, GraphError> {
    let n = diagram.points.len();
    let mut edges = Vec::new();
    for (i, pair) in diagram.points.windows(2).enumerate() {
        if let (Some(a), Some(b)) = (pair[0].y, pair[1].y) {
            if a != b || options.connect_equal_y {
                edges.push((i, i + 1));
            }
        }
    }
    for &(i, j) in &options.extra_edges {
        if i >= n || j >= n {
            return Err(GraphError::UnknownPoint { i, j, points: n });
        }
        if diagram.points[i].y.is_none() || diagram.points[j].y.is_none() {
            return Err(GraphError::RestEndpoint { i, j });
        }
        if !edges.contains(&(i, j)) {
            edges.push((i, j));
        }
    }
    Ok(PointDiagram {
        edges,
        ..diagram.clone()
    })
}

/// Classes, points and polyline for a whole score, using its own reference.
pub fn diagram_for_score(
    score: &Score,
    orientation: Orientation,
    options: &PolylineOptions,
) -> Result<PointDiagram, GraphError> {
    let classes = classify_notes(score)?;
    let reference = score.reference();
    if !LETTERS.contains(&reference) {
        return Err(GraphError::Reference(reference));
    }
    build_polyline(&assign_points(&classes, score.clef, reference, orientation)?, options)
}

#[derive(Serialize)]
struct JsonPoint<'a> {
    label: &'a str,
    x: usize,
    y: Option<i32>,
}

#[derive(Serialize)]
struct JsonDiagram<'a> {
    schema: &'static str,
    orientation: Orientation,
    points: Vec<JsonPoint<'a>>,
    edges: Vec<[usize; 2]>,
}

pub fn emit_json(diagram: &PointDiagram) -> String {
    let doc = JsonDiagram {
        schema: "1",
        orientation: diagram.orientation,
        points: diagram
            .points
            .iter()
            .map(|p| JsonPoint {
                label: &p.label,
                x: p.x,
                y: p.y,
            })
            .collect(),
        edges: diagram.edges.iter().map(|&(i, j)| [i, j]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("diagram serializes")
}

/// Reads an edge sidecar: one `i j` pair per line, `#` comments allowed.
pub fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>, GraphError> {
    let mut edges = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| GraphError::Parse { line: n + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(err(format!("expected two point indices, found `{line}`")));
        };
        let index = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("`{s}` is not a point index")))
        };
        edges.push((index(a)?, index(b)?));
    }
    Ok(edges)
}
