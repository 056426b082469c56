//! Golden reports live beside their fixtures as `<fixture>.json`; scores also
//! carry their point diagram as `<fixture>.graph.json`.

use std::path::{Path, PathBuf};

use brauer_kit::graph::{diagram_for_score, emit_json, Orientation, PolylineOptions};
use brauer_kit::score::{parse_score_with, ParseOptions};

use crate::analyze::{AnalyzerRegistry, Request};
use crate::error::{CliError, Result};
use crate::io::{read_text, write_text};

fn golden(path: &Path, suffix: &str) -> PathBuf {
    let mut name = path.file_name().expect("fixture has a name").to_os_string();
    name.push(suffix);
    path.with_file_name(name)
}

/// Every output a fixture should reproduce, paired with its golden path.
/// Scores are read leniently so irregular transcriptions still verify; their
/// warnings are part of the report.
fn expected_outputs(registry: &AnalyzerRegistry, path: &Path) -> Result<Vec<(PathBuf, String)>> {
    let Some(analyzer) = registry.for_fixture(path) else {
        return Ok(Vec::new());
    };
    let input = path.to_string_lossy();
    let request = Request {
        input: &input,
        keylen: None,
        lax: true,
    };
    let mut out = vec![(golden(path, ".json"), analyzer.analyze(&request)?.to_json())];
    if analyzer.name() == "score" {
        let score = parse_score_with(&read_text(path)?, ParseOptions { lax: true })?;
        let diagram = diagram_for_score(&score, Orientation::Standard, &PolylineOptions::default())?;
        out.push((golden(path, ".graph.json"), emit_json(&diagram) + "\n"));
    }
    Ok(out)
}

pub fn run(registry: &AnalyzerRegistry, dir: &Path, bless: bool) -> Result<()> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| CliError::validation("io", format!("cannot list {}: {e}", dir.display())))?;
    let mut fixtures: Vec<PathBuf> = entries.filter_map(|e| e.ok().map(|e| e.path())).collect();
    fixtures.sort();

    let mut failures = 0;
    let mut checked = 0;
    for fixture in &fixtures {
        for (golden, actual) in expected_outputs(registry, fixture)? {
            checked += 1;
            if bless {
                write_text(&golden, &actual)?;
                println!("wrote {}", golden.display());
                continue;
            }
            let status = match std::fs::read_to_string(&golden) {
                Ok(expected) if expected == actual => "ok",
                Ok(_) => "MISMATCH",
                Err(_) => "MISSING",
            };
            if status != "ok" {
                failures += 1;
            }
            println!("{status:<8} {}", golden.display());
        }
    }
    if checked == 0 {
        return Err(CliError::validation(
            "verify",
            format!("no fixtures in {}", dir.display()),
        ));
    }
    if failures > 0 {
        return Err(CliError::validation(
            "verify",
            format!("{failures} of {checked} golden reports differ"),
        ));
    }
    Ok(())
}
