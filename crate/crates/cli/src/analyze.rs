//! Analyzers turn one kind of input into an invariants report. Each is
//! registered by name and picked from the command line.

use std::collections::BTreeMap;
use std::path::Path;

use brauer_kit::brauer::{invariants, parse_config, parse_profile};
use brauer_kit::cipher::{brauer_ioc, index_of_coincidence, vigenere_to_config, Coincidence};
use brauer_kit::score::{parse_score_with, score_to_config, ParseOptions};
use brauer_kit::AlgebraInvariants;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::io::read_text;

pub const SCHEMA: &str = "1";

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub source: &'static str,
    #[serde(flatten)]
    pub invariants: AlgebraInvariants,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ioc: Option<Coincidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brauer_ioc: Option<Coincidence>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    fn new(source: &'static str, invariants: AlgebraInvariants) -> Self {
        Self {
            schema: SCHEMA,
            source,
            invariants,
            ioc: None,
            brauer_ioc: None,
            warnings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// What an analyzer reads: a file path or literal text, plus options.
#[derive(Debug, Default)]
pub struct Request<'a> {
    pub input: &'a str,
    pub keylen: Option<usize>,
    pub lax: bool,
}

pub trait Analyzer {
    fn name(&self) -> &'static str;
    fn analyze(&self, request: &Request) -> Result<AnalysisReport>;
}

struct ConfigAnalyzer;

impl Analyzer for ConfigAnalyzer {
    fn name(&self) -> &'static str {
        "config"
    }

    fn analyze(&self, request: &Request) -> Result<AnalysisReport> {
        let config = parse_config(&read_text(Path::new(request.input))?)?;
        Ok(AnalysisReport::new(self.name(), invariants(&config)))
    }
}

struct CiphertextAnalyzer;

impl Analyzer for CiphertextAnalyzer {
    fn name(&self) -> &'static str {
        "ciphertext"
    }

    fn analyze(&self, request: &Request) -> Result<AnalysisReport> {
        let m = request
            .keylen
            .ok_or_else(|| CliError::validation("usage", "--ciphertext needs --keylen"))?;
        let text = request.input.trim();
        let config = vigenere_to_config(text, m)?;
        let chars: Vec<char> = text.chars().collect();
        let mut report = AnalysisReport::new(self.name(), invariants(&config));
        report.ioc = Some(index_of_coincidence(&chars)?);
        report.brauer_ioc = Some(brauer_ioc(text, m)?);
        Ok(report)
    }
}

struct ScoreAnalyzer;

impl Analyzer for ScoreAnalyzer {
    fn name(&self) -> &'static str {
        "score"
    }

    fn analyze(&self, request: &Request) -> Result<AnalysisReport> {
        let text = read_text(Path::new(request.input))?;
        let score = parse_score_with(&text, ParseOptions { lax: request.lax })?;
        let config = score_to_config(&score)?;
        let mut report = AnalysisReport::new(self.name(), invariants(&config));
        report.warnings = score.warnings;
        Ok(report)
    }
}

struct ProfileAnalyzer;

impl Analyzer for ProfileAnalyzer {
    fn name(&self) -> &'static str {
        "profile"
    }

    fn analyze(&self, request: &Request) -> Result<AnalysisReport> {
        let profile = parse_profile(&read_text(Path::new(request.input))?)?;
        Ok(AnalysisReport::new(self.name(), profile.invariants()))
    }
}

pub struct AnalyzerRegistry {
    analyzers: BTreeMap<&'static str, Box<dyn Analyzer>>,
}

impl Default for AnalyzerRegistry {
    fn default() -> Self {
        let mut registry = Self {
            analyzers: BTreeMap::new(),
        };
        registry.register(Box::new(ConfigAnalyzer));
        registry.register(Box::new(CiphertextAnalyzer));
        registry.register(Box::new(ScoreAnalyzer));
        registry.register(Box::new(ProfileAnalyzer));
        registry
    }
}

impl AnalyzerRegistry {
    pub fn register(&mut self, analyzer: Box<dyn Analyzer>) {
        self.analyzers.insert(analyzer.name(), analyzer);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Analyzer> {
        self.analyzers
            .get(name)
            .map(|a| a.as_ref())
            .ok_or_else(|| CliError::validation("usage", format!("no analyzer named `{name}`")))
    }

    /// The analyzer for a fixture file, chosen by extension.
    pub fn for_fixture(&self, path: &Path) -> Option<&dyn Analyzer> {
        let name = match path.extension()?.to_str()? {
            "config" => "config",
            "bsc" => "score",
            "profile" => "profile",
            _ => return None,
        };
        self.get(name).ok()
    }
}
