use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::ScoreError;

/// Pitch letters in scale order `a < b < … < g`.
pub const LETTERS: [char; 7] = ['a', 'b', 'c', 'd', 'e', 'f', 'g'];

/// Note values as exponents: whole = 64 down to sixty-fourth = 1.
pub const EXPONENTS: [u32; 7] = [64, 32, 16, 8, 4, 2, 1];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Accidental {
    None,
    Flat,
    Sharp,
    Natural,
}

impl Accidental {
    pub fn prefix(self) -> &'static str {
        match self {
            Accidental::None => "",
            Accidental::Flat => "-",
            Accidental::Sharp => "+",
            Accidental::Natural => "=",
        }
    }

    pub fn from_prefix(c: char) -> Option<Self> {
        match c {
            '-' => Some(Accidental::Flat),
            '+' => Some(Accidental::Sharp),
            '=' => Some(Accidental::Natural),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum NoteKind {
    Pitched { letter: char, accidental: Accidental },
    Rest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Bracket,
    Tie,
    Repeat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Group {
    pub kind: GroupKind,
    pub id: usize,
}

/// One note or rest. Group membership is carried along but never affects
/// which vertex the event belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoteEvent {
    #[serde(flatten)]
    pub kind: NoteKind,
    pub exponent: u32,
    pub dotted: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub groups: Vec<Group>,
}

impl NoteEvent {
    pub fn note(letter: char, accidental: Accidental, exponent: u32) -> Self {
        Self {
            kind: NoteKind::Pitched { letter, accidental },
            exponent,
            dotted: false,
            groups: Vec::new(),
        }
    }

    pub fn rest(exponent: u32) -> Self {
        Self {
            kind: NoteKind::Rest,
            exponent,
            dotted: false,
            groups: Vec::new(),
        }
    }

    pub fn dotted(mut self) -> Self {
        self.dotted = true;
        self
    }

    pub fn is_rest(&self) -> bool {
        matches!(self.kind, NoteKind::Rest)
    }

    pub fn letter(&self) -> Option<char> {
        match self.kind {
            NoteKind::Pitched { letter, .. } => Some(letter),
            NoteKind::Rest => None,
        }
    }

    pub fn accidental(&self) -> Option<Accidental> {
        match self.kind {
            NoteKind::Pitched { accidental, .. } => Some(accidental),
            NoteKind::Rest => None,
        }
    }

    /// Duration in sixty-fourths; a dot adds half the value.
    pub fn effective_exponent(&self) -> u32 {
        if self.dotted {
            self.exponent * 3 / 2
        } else {
            self.exponent
        }
    }

    /// The note-class label: duration (with dot), accidental and pitch, or
    /// the rest of that duration. Two events share a vertex exactly when
    /// their labels are equal.
    pub fn class_label(&self) -> String {
        let dot = if self.dotted { "." } else { "" };
        match self.kind {
            NoteKind::Pitched { letter, accidental } => {
                format!("{}{letter}{}{dot}", accidental.prefix(), self.exponent)
            }
            NoteKind::Rest => format!("r{}{dot}", self.exponent),
        }
    }
}

impl fmt::Display for NoteEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.class_label())
    }
}

impl FromStr for NoteEvent {
    type Err = ScoreError;

    /// Parses a single note-class label such as `-g8`, `b16.` or `r16`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parser::parse_event_token(s).ok_or_else(|| ScoreError::ForeignLabel(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Clef {
    Treble,
    Bass,
    Alto,
}

impl Clef {
    /// The note the clef marks: treble e, bass d, alto a.
    pub fn reference(self) -> char {
        match self {
            Clef::Treble => 'e',
            Clef::Bass => 'd',
            Clef::Alto => 'a',
        }
    }

    /// The seven letters from two steps below the reference upwards. Heights
    /// are measured along this fixed ladder, so moving the reference shifts
    /// every height uniformly.
    pub fn ladder(self) -> [char; 7] {
        let start = (letter_index(self.reference()) + 5) % 7;
        std::array::from_fn(|i| LETTERS[(start + i) % 7])
    }

    pub fn name(self) -> &'static str {
        match self {
            Clef::Treble => "treble",
            Clef::Bass => "bass",
            Clef::Alto => "alto",
        }
    }
}

impl FromStr for Clef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "treble" => Ok(Clef::Treble),
            "bass" => Ok(Clef::Bass),
            "alto" => Ok(Clef::Alto),
            other => Err(format!("unknown clef `{other}`")),
        }
    }
}

pub(crate) fn letter_index(letter: char) -> usize {
    LETTERS
        .iter()
        .position(|&l| l == letter)
        .unwrap_or_else(|| panic!("not a pitch letter: {letter:?}"))
}

/// `n / 2^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TimeSignature {
    pub beats: u32,
    pub unit: u32,
}

impl TimeSignature {
    pub fn new(beats: u32, unit: u32) -> Result<Self, String> {
        if beats == 0 || !unit.is_power_of_two() || unit > 64 {
            return Err(format!("invalid time signature {beats}/{unit}"));
        }
        Ok(Self { beats, unit })
    }

    /// `n · 2^(6 − m)` sixty-fourths per measure.
    pub fn measure_length(&self) -> u32 {
        self.beats * (64 / self.unit)
    }
}

impl Default for TimeSignature {
    fn default() -> Self {
        Self { beats: 4, unit: 4 }
    }
}

impl fmt::Display for TimeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beats, self.unit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Measure {
    pub events: Vec<NoteEvent>,
    /// 1-based source line of the first event.
    pub line: usize,
}

impl Measure {
    pub fn duration(&self) -> u32 {
        self.events.iter().map(NoteEvent::effective_exponent).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Score {
    pub clef: Clef,
    pub time: TimeSignature,
    /// Overrides the clef's reference letter for point heights.
    pub reference: Option<char>,
    /// Global accidental annotations such as `-c`, carried as metadata.
    pub labels: Vec<String>,
    pub measures: Vec<Measure>,
    /// Irregularities tolerated in lax mode.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Score {
    pub fn reference(&self) -> char {
        self.reference.unwrap_or_else(|| self.clef.reference())
    }

    pub fn events(&self) -> impl Iterator<Item = &NoteEvent> {
        self.measures.iter().flat_map(|m| m.events.iter())
    }
}
