use std::fmt::Write as _;

use super::model::{letter_index, Accidental, NoteEvent, NoteKind, Score, LETTERS};
use super::ScoreError;
use crate::brauer::{BrauerConfiguration, VertexId};

/// One polygon per measure; each event contributes its note-class vertex.
pub fn score_to_config(score: &Score) -> Result<BrauerConfiguration, ScoreError> {
    let mut words = Vec::with_capacity(score.measures.len());
    for (i, m) in score.measures.iter().enumerate() {
        if m.events.len() < 2 {
            return Err(ScoreError::MeasureTooShort {
                measure: i + 1,
                len: m.events.len(),
            });
        }
        words.push(
            m.events
                .iter()
                .map(|e| VertexId::new(e.class_label()))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(BrauerConfiguration::new(words)?)
}

/// Writes the configuration's message as score text: the polygon words in
/// order, one measure each, without a header.
pub fn config_to_message(config: &BrauerConfiguration) -> Result<String, ScoreError> {
    let mut measures = Vec::with_capacity(config.polygon_count());
    for polygon in config.polygons() {
        let mut tokens = Vec::with_capacity(polygon.len());
        for v in polygon.labeled_word() {
            let event: NoteEvent = v.as_str().parse()?;
            tokens.push(event.class_label());
        }
        measures.push(tokens.join(" "));
    }
    Ok(format!("| {} |\n", measures.join(" | ")))
}

/// Canonical text of a score: header line, then one measure per line.
/// Grouping marks are not reproduced.
pub fn render_score(score: &Score) -> String {
    let mut out = format!("clef={} time={}", score.clef.name(), score.time);
    if let Some(r) = score.reference {
        let _ = write!(out, " ref={r}");
    }
    if !score.labels.is_empty() {
        let _ = write!(out, " labels={}", score.labels.join(","));
    }
    out.push('\n');
    for m in &score.measures {
        let tokens: Vec<String> = m.events.iter().map(NoteEvent::class_label).collect();
        let _ = writeln!(out, "| {}", tokens.join(" "));
    }
    out
}

/// Moves the letter `k` steps along `a < b < … < g < a`, keeping duration
/// and accidental.
pub fn step_pitch(event: &NoteEvent, k: i32) -> Result<NoteEvent, ScoreError> {
    let NoteKind::Pitched { letter, accidental } = event.kind else {
        return Err(ScoreError::RestHasNoPitch);
    };
    let index = (letter_index(letter) as i32 + k).rem_euclid(7) as usize;
    Ok(NoteEvent {
        kind: NoteKind::Pitched {
            letter: LETTERS[index],
            accidental,
        },
        ..event.clone()
    })
}

pub fn apply_accidental(event: &NoteEvent, accidental: Accidental) -> Result<NoteEvent, ScoreError> {
    let NoteKind::Pitched { letter, .. } = event.kind else {
        return Err(ScoreError::RestHasNoPitch);
    };
    Ok(NoteEvent {
        kind: NoteKind::Pitched { letter, accidental },
        ..event.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{dim_lambda, VertexId};
    use crate::score::{parse_score, parse_score_with, ParseOptions};
    use proptest::prelude::*;

    #[test]
    fn single_measure_of_quarters() {
        let s = parse_score("| c16 c16 c16 c16").unwrap();
        let c = score_to_config(&s).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.valency(&VertexId::new("c16").unwrap()).unwrap(), 4);
        assert_eq!(dim_lambda(&c), 14);
        assert_eq!(config_to_message(&c).unwrap(), "| c16 c16 c16 c16 |\n");
    }

    #[test]
    fn accidentals_stay_distinct() {
        let s = parse_score("time=3/8 | -g8 g8 +g8").unwrap();
        let c = score_to_config(&s).unwrap();
        assert_eq!(c.vertex_count(), 3);
    }

    #[test]
    fn one_event_measure_is_rejected() {
        let s = parse_score("time=1/4 | c16 | d8 d8").unwrap();
        assert_eq!(
            score_to_config(&s),
            Err(ScoreError::MeasureTooShort { measure: 1, len: 1 })
        );
    }

    #[test]
    fn foreign_labels() {
        let c = BrauerConfiguration::from_label_words(&[vec!["c16", "x"]]).unwrap();
        assert_eq!(config_to_message(&c), Err(ScoreError::ForeignLabel("x".into())));
    }

    #[test]
    fn stepping_and_accidentals() {
        let a = NoteEvent::note('a', Accidental::None, 8);
        assert_eq!(step_pitch(&a, 1).unwrap().letter(), Some('b'));
        assert_eq!(step_pitch(&step_pitch(&a, 1).unwrap(), -1).unwrap(), a);
        assert_eq!(step_pitch(&a, -1).unwrap().letter(), Some('g'));
        let g = NoteEvent::note('g', Accidental::None, 8);
        let flat = apply_accidental(&g, Accidental::Flat).unwrap();
        assert_eq!(flat.class_label(), "-g8");
        assert_ne!(flat.class_label(), g.class_label());
        assert_eq!(step_pitch(&NoteEvent::rest(8), 1), Err(ScoreError::RestHasNoPitch));
    }

    #[test]
    fn render_is_a_fixpoint() {
        let s = parse_score("clef=bass time=2/2 labels=-c\n| [b8 f8] (e8 b8 d8 -g8 e8 b8) | b16. c8 r16 a16").unwrap();
        let text = render_score(&s);
        let again = parse_score(&text).unwrap();
        assert_eq!(render_score(&again), text);
    }

    fn event_strategy() -> impl Strategy<Value = NoteEvent> {
        (0usize..8, 0usize..4, 0usize..6, any::<bool>()).prop_map(|(l, a, e, dot)| {
            let exponent = [64, 32, 16, 8, 4, 2][e];
            let acc = [
                Accidental::None,
                Accidental::Flat,
                Accidental::Sharp,
                Accidental::Natural,
            ][a];
            let event = if l == 7 {
                NoteEvent::rest(exponent)
            } else {
                NoteEvent::note(LETTERS[l], acc, exponent)
            };
            if dot {
                event.dotted()
            } else {
                event
            }
        })
    }

    proptest! {
        #[test]
        fn message_round_trip(measures in proptest::collection::vec(
            proptest::collection::vec(event_strategy(), 2..6), 1..5)) {
            let words: Vec<Vec<String>> = measures.iter().map(|m| m.iter().map(NoteEvent::class_label).collect()).collect();
            let config = BrauerConfiguration::from_label_words(&words).unwrap();
            let text = config_to_message(&config).unwrap();
            let score = parse_score_with(&text, ParseOptions { lax: true }).unwrap();
            prop_assert_eq!(score_to_config(&score).unwrap(), config);
        }

        #[test]
        fn invariants_ignore_order_within_measures(measures in proptest::collection::vec(
            proptest::collection::vec(event_strategy(), 2..6), 1..5)) {
            let forward: Vec<Vec<String>> = measures.iter().map(|m| m.iter().map(NoteEvent::class_label).collect()).collect();
            let backward: Vec<Vec<String>> = forward.iter().map(|m| m.iter().rev().cloned().collect()).collect();
            let a = crate::brauer::invariants(&BrauerConfiguration::from_label_words(&forward).unwrap());
            let b = crate::brauer::invariants(&BrauerConfiguration::from_label_words(&backward).unwrap());
            prop_assert_eq!(a, b);
        }
    }
}
