use brauer_kit::brauer::invariants;
use brauer_kit::cipher::{
    friedman_keylength, friedman_recover_key, vigenere_to_config, Alphabet, CipherRegistry, KeylengthCandidate,
    PairShift, VigenereKey, ENGLISH_FREQUENCIES,
};
use brauer_kit::graph::{diagram_for_score, emit_json, emit_svg, parse_edges, Orientation, PolylineOptions};
use brauer_kit::score::{parse_score_with, Clef, ParseOptions};
use serde::Serialize;

use crate::analyze::{AnalyzerRegistry, Request, SCHEMA};
use crate::error::{CliError, Result};
use crate::io::{read_text, text_argument, write_text};
use crate::{verify, AnalyzeArgs, AttackArgs, CipherArgs, GraphArgs, ScoreCheckArgs};

pub fn cipher(args: &CipherArgs, encrypt: bool) -> Result<()> {
    let registry = CipherRegistry::default();
    let cipher = registry.get(&args.system).ok_or_else(|| {
        let names: Vec<&str> = registry.names().collect();
        CliError::validation(
            "usage",
            format!("unknown system `{}` (available: {})", args.system, names.join(", ")),
        )
    })?;
    let mut text = text_argument(args.text.as_deref(), args.input.as_deref())?;
    if args.strip {
        text = Alphabet::default().strip(&text);
    }
    let out = if encrypt {
        cipher.encrypt(&text, &args.key)?
    } else {
        cipher.decrypt(&text, &args.key)?
    };
    println!("{out}");
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct KeyOut {
    key: String,
    chi2: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BrauerOut {
    dim_lambda: u64,
    dim_center: Option<u64>,
    loops: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AttackReport {
    schema: &'static str,
    length: usize,
    keylength_candidates: Vec<KeylengthCandidate>,
    keylength: usize,
    key_candidates: Vec<KeyOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    inconsistent_pairs: Vec<PairShift>,
    brauer: BrauerOut,
}

pub fn attack(args: &AttackArgs) -> Result<()> {
    let alphabet = Alphabet::default();
    let mut text = text_argument(args.text.as_deref(), args.input.as_deref())?;
    if args.strip {
        text = alphabet.strip(&text);
    }
    let residues = alphabet.encode(&text)?;
    let ranked = friedman_keylength(&residues, args.max_keylen)?;
    let m = ranked[0].m;
    let recovery = friedman_recover_key(&residues, m, alphabet.len(), &ENGLISH_FREQUENCIES)?;
    let key_candidates = recovery
        .candidates
        .iter()
        .map(|c| {
            Ok(KeyOut {
                key: VigenereKey::new(c.residues.clone(), &alphabet)?.to_word(&alphabet),
                chi2: c.chi2,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let normalized = alphabet.decode(&residues);
    let inv = invariants(&vigenere_to_config(&normalized, m)?);
    let report = AttackReport {
        schema: SCHEMA,
        length: residues.len(),
        keylength_candidates: ranked,
        keylength: m,
        key_candidates,
        inconsistent_pairs: recovery.inconsistent,
        brauer: BrauerOut {
            dim_lambda: inv.dim_lambda,
            dim_center: inv.dim_center,
            loops: inv.loops,
        },
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}

pub fn analyze(args: &AnalyzeArgs) -> Result<()> {
    let registry = AnalyzerRegistry::default();
    if let Some(dir) = &args.verify {
        return verify::run(&registry, dir, args.bless);
    }
    let (name, input) = if let Some(p) = &args.config {
        ("config", p.to_string_lossy().into_owned())
    } else if let Some(t) = &args.ciphertext {
        ("ciphertext", t.clone())
    } else if let Some(p) = &args.score {
        ("score", p.to_string_lossy().into_owned())
    } else if let Some(p) = &args.profile {
        ("profile", p.to_string_lossy().into_owned())
    } else {
        return Err(CliError::validation("usage", "nothing to analyze"));
    };
    let request = Request {
        input: &input,
        keylen: args.keylen,
        lax: args.lax,
    };
    print!("{}", registry.get(name)?.analyze(&request)?.to_json());
    Ok(())
}

pub fn score_check(args: &ScoreCheckArgs) -> Result<()> {
    let score = parse_score_with(&read_text(&args.file)?, ParseOptions { lax: args.lax })?;
    let events = score.events().count();
    println!(
        "ok: {} measures, {events} events, clef {}, time {}",
        score.measures.len(),
        score.clef.name(),
        score.time
    );
    for w in &score.warnings {
        println!("warning: {w}");
    }
    Ok(())
}

pub fn graph(args: &GraphArgs) -> Result<()> {
    let mut score = parse_score_with(&read_text(&args.score)?, ParseOptions { lax: args.lax })?;
    if let Some(c) = &args.clef {
        score.clef = c
            .parse::<Clef>()
            .map_err(|e| CliError::validation("usage", e.to_string()))?;
    }
    if let Some(r) = args.reference {
        score.reference = Some(r);
    }
    let orientation: Orientation = args.orientation.parse()?;
    let options = PolylineOptions {
        connect_equal_y: args.connect_equal,
        extra_edges: match &args.edges {
            Some(p) => parse_edges(&read_text(p)?)?,
            None => Vec::new(),
        },
    };
    let diagram = diagram_for_score(&score, orientation, &options)?;
    if let Some(p) = &args.svg {
        write_text(p, &emit_svg(&diagram))?;
    }
    if let Some(p) = &args.json {
        write_text(p, &(emit_json(&diagram) + "\n"))?;
    }
    if args.svg.is_none() && args.json.is_none() {
        println!("{}", emit_json(&diagram));
    }
    Ok(())
}
