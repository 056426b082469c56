//! Line-oriented text formats for configurations and valency profiles.
//!
//! Configuration files hold one polygon per line:
//!
//! ```text
//! # comment
//! O E X B D K
//! C R Y P label: 3 4 1 2
//! ```
//!
//! Profile files describe a configuration only through its counts:
//!
//! ```text
//! polygons 13
//! loops 32
//! valency 1 12
//! valency 2 3
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::config::{BrauerConfiguration, VertexId};
use super::invariants::ValencyProfile;
use super::BrauerError;
use crate::perm::Permutation;

const LABEL_MARKER: &str = "label:";

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_config(text: &str) -> Result<BrauerConfiguration, BrauerError> {
    let mut polygons = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (word_part, label) = match line.find(LABEL_MARKER) {
            Some(i) => {
                let perm: Permutation = line[i + LABEL_MARKER.len()..]
                    .parse()
                    .map_err(|source| BrauerError::Label { line: line_no, source })?;
                (&line[..i], Some(perm))
            }
            None => (line, None),
        };
        let word = word_part
            .split_whitespace()
            .map(VertexId::new)
            .collect::<Result<Vec<_>, _>>()?;
        if word.is_empty() {
            return Err(BrauerError::Parse {
                line: line_no,
                message: "label without a polygon word".into(),
            });
        }
        polygons.push((word, label));
    }
    if polygons.is_empty() {
        return Err(BrauerError::Parse {
            line: 0,
            message: "no polygons".into(),
        });
    }
    BrauerConfiguration::with_labels(polygons)
}

pub fn write_config(config: &BrauerConfiguration) -> String {
    let mut out = String::new();
    for polygon in config.polygons() {
        let word: Vec<&str> = polygon.word().iter().map(VertexId::as_str).collect();
        out.push_str(&word.join(" "));
        if let Some(label) = polygon.label() {
            let _ = write!(out, " {LABEL_MARKER} {label}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_profile(text: &str) -> Result<ValencyProfile, BrauerError> {
    let mut polygons = None;
    let mut loops = None;
    let mut histogram = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| BrauerError::Parse { line: line_no, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let numbers = fields[1..]
            .iter()
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|_| err(format!("expected a number, found `{f}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        match (fields[0], numbers.as_slice()) {
            ("polygons", [p]) => polygons = Some(*p),
            ("loops", [l]) => loops = Some(*l),
            ("valency", [k, count]) => {
                if histogram.insert(*k, *count).is_some() {
                    return Err(err(format!("valency {k} listed twice")));
                }
            }
            (key, _) => return Err(err(format!("unrecognized entry `{key}`"))),
        }
    }
    let missing = |what: &str| BrauerError::Parse {
        line: 0,
        message: format!("missing `{what}` entry"),
    };
    histogram.retain(|_, c| *c > 0);
    ValencyProfile::new(
        polygons.ok_or_else(|| missing("polygons"))?,
        loops.ok_or_else(|| missing("loops"))?,
        histogram,
    )
}

pub fn write_profile(profile: &ValencyProfile) -> String {
    let mut out = format!("polygons {}\nloops {}\n", profile.polygons, profile.loops);
    for (k, c) in &profile.histogram {
        let _ = writeln!(out, "valency {k} {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{dim_center, dim_lambda};

    #[test]
    fn parses_comments_and_labels() {
        let text = "# vigenere split\nO E X B D K\nO L F W D\n\nP R G D E  # third\nA I G O P label: 5 4 3 2 1\n";
        let c = parse_config(text).unwrap();
        assert_eq!(c.polygon_count(), 4);
        assert_eq!(dim_lambda(&c), 35);
        assert_eq!(dim_center(&c).unwrap(), 14);
        assert_eq!(c.polygons()[3].label().unwrap().oneline(), &[5, 4, 3, 2, 1]);
        assert_eq!(parse_config(&write_config(&c)).unwrap(), c);
    }

    #[test]
    fn reports_bad_label_line() {
        let err = parse_config("a b\na b label: 1 1\n").unwrap_err();
        assert!(matches!(err, BrauerError::Label { line: 2, .. }));
    }

    #[test]
    fn rejects_empty_input() {
        assert!(matches!(parse_config("# nothing\n"), Err(BrauerError::Parse { .. })));
    }

    #[test]
    fn profile_round_trip() {
        let text = "polygons 13\nloops 32\nvaluency 1 12\n";
        assert!(matches!(parse_profile(text), Err(BrauerError::Parse { line: 3, .. })));
        let text = "polygons 4\nloops 9\nvalency 1 9\nvalency 2 3\nvalency 3 2\n";
        let p = parse_profile(text).unwrap();
        assert_eq!((p.dim_lambda(), p.dim_center()), (35, 14));
        assert_eq!(write_profile(&p), text);
    }
}
