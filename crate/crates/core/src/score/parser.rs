//! Recursive-descent parser for the score DSL. The grammar is documented in
//! `docs/score-dsl.md`.

use super::model::{Accidental, Clef, Group, GroupKind, Measure, NoteEvent, NoteKind, Score, TimeSignature};
use super::ScoreError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Report measure-length mismatches and unclosed ties as warnings.
    pub lax: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Bar(Pos),
    Event(NoteEvent, Pos),
    Open(GroupKind, Pos),
    Close(GroupKind, Pos),
    Repeat { body: Vec<Node>, count: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Lexeme {
    Bar,
    Open(GroupKind),
    Close(GroupKind),
    Word(String),
}

fn lex(text: &str) -> Vec<(Lexeme, Pos)> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let pos = Pos {
                line: n + 1,
                col: i + 1,
            };
            let c = chars[i];
            let single = match c {
                '|' => Some(Lexeme::Bar),
                '[' => Some(Lexeme::Open(GroupKind::Bracket)),
                ']' => Some(Lexeme::Close(GroupKind::Bracket)),
                '(' => Some(Lexeme::Open(GroupKind::Tie)),
                ')' => Some(Lexeme::Close(GroupKind::Tie)),
                '{' => Some(Lexeme::Open(GroupKind::Repeat)),
                '}' => Some(Lexeme::Close(GroupKind::Repeat)),
                _ => None,
            };
            if let Some(lexeme) = single {
                out.push((lexeme, pos));
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else {
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && !"|[](){}".contains(chars[i]) {
                    i += 1;
                }
                out.push((Lexeme::Word(chars[start..i].iter().collect()), pos));
            }
        }
    }
    out
}

enum TokenProblem {
    Unknown,
    DottedSixtyFourth,
}

fn event_token(s: &str) -> Result<NoteEvent, TokenProblem> {
    let (body, dotted) = match s.strip_suffix('.') {
        Some(b) => (b, true),
        None => (s, false),
    };
    let mut chars = body.chars();
    let mut first = chars.next().ok_or(TokenProblem::Unknown)?;
    let accidental = match Accidental::from_prefix(first) {
        Some(a) => {
            first = chars.next().ok_or(TokenProblem::Unknown)?;
            a
        }
        None => Accidental::None,
    };
    let digits = chars.as_str();
    let exponent: u32 = match digits {
        "64" | "32" | "16" | "8" | "4" | "2" | "1" => digits.parse().expect("listed values parse"),
        _ => return Err(TokenProblem::Unknown),
    };
    let kind = match first {
        'r' if accidental == Accidental::None => NoteKind::Rest,
        'a'..='g' => NoteKind::Pitched {
            letter: first,
            accidental,
        },
        _ => return Err(TokenProblem::Unknown),
    };
    if dotted && exponent == 1 {
        return Err(TokenProblem::DottedSixtyFourth);
    }
    Ok(NoteEvent {
        kind,
        exponent,
        dotted,
        groups: Vec::new(),
    })
}

pub(crate) fn parse_event_token(s: &str) -> Option<NoteEvent> {
    event_token(s).ok()
}

#[derive(Default)]
struct Header {
    clef: Option<Clef>,
    time: Option<TimeSignature>,
    reference: Option<char>,
    labels: Vec<String>,
}

fn header_entry(header: &mut Header, key: &str, value: &str, pos: Pos) -> Result<(), ScoreError> {
    let err = |message: String| ScoreError::Header {
        line: pos.line,
        col: pos.col,
        message,
    };
    match key {
        "clef" => header.clef = Some(value.parse().map_err(err)?),
        "time" => {
            let (n, d) = value
                .split_once('/')
                .ok_or_else(|| err(format!("time signature `{value}` is not n/d")))?;
            let n: u32 = n.parse().map_err(|_| err(format!("bad beat count `{n}`")))?;
            let d: u32 = d.parse().map_err(|_| err(format!("bad beat unit `{d}`")))?;
            header.time = Some(TimeSignature::new(n, d).map_err(err)?);
        }
        "ref" => {
            let mut chars = value.chars();
            match (chars.next(), chars.next()) {
                (Some(c @ 'a'..='g'), None) => header.reference = Some(c),
                _ => return Err(err(format!("reference `{value}` is not a pitch letter"))),
            }
        }
        "labels" => {
            header.labels = value.split(',').filter(|s| !s.is_empty()).map(str::to_string).collect();
        }
        other => return Err(err(format!("unknown header key `{other}`"))),
    }
    Ok(())
}

struct Parser {
    lexemes: Vec<(Lexeme, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(Lexeme, Pos)> {
        self.lexemes.get(self.at)
    }

    fn header(&mut self) -> Result<Header, ScoreError> {
        let mut header = Header::default();
        while let Some((Lexeme::Word(w), pos)) = self.peek() {
            let Some((key, value)) = w.split_once('=').filter(|(k, _)| !k.is_empty()) else {
                break;
            };
            header_entry(&mut header, key, value, *pos)?;
            self.at += 1;
        }
        Ok(header)
    }

    /// Parses nodes until the end of input or, inside a repeat, its `}`.
    fn sequence(&mut self, inside_repeat: Option<Pos>) -> Result<Vec<Node>, ScoreError> {
        let mut nodes = Vec::new();
        while let Some((lexeme, pos)) = self.peek().cloned() {
            self.at += 1;
            match lexeme {
                Lexeme::Bar => nodes.push(Node::Bar(pos)),
                Lexeme::Open(GroupKind::Repeat) => {
                    let body = self.sequence(Some(pos))?;
                    let count = self.repeat_count(pos)?;
                    nodes.push(Node::Repeat { body, count });
                }
                Lexeme::Close(GroupKind::Repeat) => {
                    if inside_repeat.is_some() {
                        return Ok(nodes);
                    }
                    return Err(ScoreError::UnexpectedClose {
                        kind: GroupKind::Repeat,
                        line: pos.line,
                        col: pos.col,
                    });
                }
                Lexeme::Open(kind) => nodes.push(Node::Open(kind, pos)),
                Lexeme::Close(kind) => nodes.push(Node::Close(kind, pos)),
                Lexeme::Word(w) => {
                    if w.contains('=') && !w.starts_with('=') {
                        return Err(ScoreError::Header {
                            line: pos.line,
                            col: pos.col,
                            message: format!("header entry `{w}` after the first note"),
                        });
                    }
                    match event_token(&w) {
                        Ok(e) => nodes.push(Node::Event(e, pos)),
                        Err(TokenProblem::DottedSixtyFourth) => {
                            return Err(ScoreError::DottedSixtyFourth {
                                line: pos.line,
                                col: pos.col,
                            })
                        }
                        Err(TokenProblem::Unknown) => {
                            return Err(ScoreError::UnknownToken {
                                token: w,
                                line: pos.line,
                                col: pos.col,
                            })
                        }
                    }
                }
            }
        }
        match inside_repeat {
            Some(pos) => Err(ScoreError::UnclosedGroup {
                kind: GroupKind::Repeat,
                line: pos.line,
                col: pos.col,
            }),
            None => Ok(nodes),
        }
    }

    fn repeat_count(&mut self, open: Pos) -> Result<usize, ScoreError> {
        let count = match self.peek() {
            Some((Lexeme::Word(w), _)) => w.strip_prefix('x').and_then(|n| n.parse::<usize>().ok()),
            _ => None,
        };
        match count {
            Some(n) if n >= 1 => {
                self.at += 1;
                Ok(n)
            }
            _ => Err(ScoreError::Header {
                line: open.line,
                col: open.col,
                message: "repeat group must be followed by x<N> with N >= 1".into(),
            }),
        }
    }
}

#[derive(Default)]
struct Flattener {
    items: Vec<Option<(NoteEvent, Pos)>>,
    brackets: Vec<(usize, Pos)>,
    ties: Vec<(usize, Pos)>,
    repeats: Vec<usize>,
    next_id: [usize; 3],
    stray_tie_closes: Vec<Pos>,
}

impl Flattener {
    fn fresh(&mut self, kind: GroupKind) -> usize {
        let slot = kind as usize;
        self.next_id[slot] += 1;
        self.next_id[slot]
    }

    fn walk(&mut self, nodes: &[Node]) -> Result<(), ScoreError> {
        for node in nodes {
            match node {
                Node::Bar(_) => self.items.push(None),
                Node::Event(e, pos) => {
                    let mut e = e.clone();
                    e.groups.extend(self.brackets.iter().map(|&(id, _)| Group {
                        kind: GroupKind::Bracket,
                        id,
                    }));
                    e.groups.extend(self.ties.iter().map(|&(id, _)| Group {
                        kind: GroupKind::Tie,
                        id,
                    }));
                    e.groups.extend(self.repeats.iter().map(|&id| Group {
                        kind: GroupKind::Repeat,
                        id,
                    }));
                    self.items.push(Some((e, *pos)));
                }
                Node::Open(kind, pos) => {
                    let id = self.fresh(*kind);
                    match kind {
                        GroupKind::Bracket => self.brackets.push((id, *pos)),
                        _ => self.ties.push((id, *pos)),
                    }
                }
                Node::Close(GroupKind::Bracket, pos) => {
                    if self.brackets.pop().is_none() {
                        return Err(ScoreError::UnexpectedClose {
                            kind: GroupKind::Bracket,
                            line: pos.line,
                            col: pos.col,
                        });
                    }
                }
                Node::Close(_, pos) => {
                    if self.ties.pop().is_none() {
                        self.stray_tie_closes.push(*pos);
                    }
                }
                Node::Repeat { body, count } => {
                    for _ in 0..*count {
                        let id = self.fresh(GroupKind::Repeat);
                        self.repeats.push(id);
                        self.walk(body)?;
                        self.repeats.pop();
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses a score in strict mode.
pub fn parse_score(text: &str) -> Result<Score, ScoreError> {
    parse_score_with(text, ParseOptions::default())
}

pub fn parse_score_with(text: &str, options: ParseOptions) -> Result<Score, ScoreError> {
    let mut parser = Parser {
        lexemes: lex(text),
        at: 0,
    };
    let header = parser.header()?;
    let nodes = parser.sequence(None)?;

    let mut flat = Flattener::default();
    flat.walk(&nodes)?;
    if let Some(&(_, pos)) = flat.brackets.first() {
        return Err(ScoreError::UnclosedGroup {
            kind: GroupKind::Bracket,
            line: pos.line,
            col: pos.col,
        });
    }
    let mut warnings = Vec::new();
    let tie_problems = flat
        .ties
        .iter()
        .map(|&(_, pos)| ScoreError::UnclosedGroup {
            kind: GroupKind::Tie,
            line: pos.line,
            col: pos.col,
        })
        .chain(flat.stray_tie_closes.iter().map(|&pos| ScoreError::UnexpectedClose {
            kind: GroupKind::Tie,
            line: pos.line,
            col: pos.col,
        }));
    for problem in tie_problems {
        if !options.lax {
            return Err(problem);
        }
        warnings.push(problem.to_string());
    }

    let time = header.time.unwrap_or_default();
    let mut measures = Vec::new();
    let mut current: Vec<NoteEvent> = Vec::new();
    let mut line = 0;
    let finish = |events: Vec<NoteEvent>, line: usize, measures: &mut Vec<Measure>| {
        if !events.is_empty() {
            measures.push(Measure { events, line });
        }
    };
    for item in flat.items {
        match item {
            Some((e, pos)) => {
                if current.is_empty() {
                    line = pos.line;
                }
                current.push(e);
            }
            None => finish(std::mem::take(&mut current), line, &mut measures),
        }
    }
    finish(current, line, &mut measures);
    if measures.is_empty() {
        return Err(ScoreError::Empty);
    }

    let expected = time.measure_length();
    for (i, m) in measures.iter().enumerate() {
        let actual = m.duration();
        if actual != expected {
            let problem = ScoreError::MeasureDuration {
                measure: i + 1,
                line: m.line,
                expected,
                actual,
            };
            if !options.lax {
                return Err(problem);
            }
            warnings.push(problem.to_string());
        }
    }

    Ok(Score {
        clef: header.clef.unwrap_or(Clef::Treble),
        time,
        reference: header.reference,
        labels: header.labels,
        measures,
        warnings,
    })
}
