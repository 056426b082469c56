mod analyze;
mod commands;
mod error;
mod io;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::CliError;
use crate::io::ColorChoice;

#[derive(Parser)]
#[command(
    name = "brauer-kit",
    version,
    about = "Brauer configuration algebras from ciphertexts and scores"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt text with a registered cipher.
    Encrypt(CipherArgs),
    /// Decrypt text with a registered cipher.
    Decrypt(CipherArgs),
    /// Run the Friedman attack on a Vigenère ciphertext and print a JSON report.
    Attack(AttackArgs),
    /// Print the algebra invariants of a configuration, ciphertext, score or profile.
    Analyze(AnalyzeArgs),
    /// Parse a score and check its measure lengths.
    ScoreCheck(ScoreCheckArgs),
    /// Draw the point diagram of a score.
    Graph(GraphArgs),
}

#[derive(Args)]
struct CipherArgs {
    /// Cipher name: vigenere, transposition or route.
    #[arg(long)]
    system: String,
    #[arg(long)]
    key: String,
    /// Remove characters outside A–Z (after case folding) before working.
    #[arg(long)]
    strip: bool,
    /// Read the text from this file instead of the argument or stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    text: Option<String>,
}

#[derive(Args)]
struct AttackArgs {
    #[arg(long, default_value_t = 10)]
    max_keylen: usize,
    #[arg(long)]
    strip: bool,
    #[arg(long)]
    input: Option<PathBuf>,
    text: Option<String>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["config", "ciphertext", "score", "profile", "verify"]))]
struct AnalyzeArgs {
    /// Polygon list, one polygon per line.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Ciphertext split into --keylen lists.
    #[arg(long, requires = "keylen")]
    ciphertext: Option<String>,
    #[arg(long)]
    keylen: Option<usize>,
    /// Score file.
    #[arg(long)]
    score: Option<PathBuf>,
    /// Accept scores with irregular measures or unclosed ties, reporting them as warnings.
    #[arg(long)]
    lax: bool,
    /// Valency profile: polygon, loop and valency counts.
    #[arg(long)]
    profile: Option<PathBuf>,
    /// Recompute every fixture in a directory and compare with its golden report.
    #[arg(long)]
    verify: Option<PathBuf>,
    /// With --verify, rewrite the golden reports instead of comparing.
    #[arg(long, requires = "verify")]
    bless: bool,
}

#[derive(Args)]
struct ScoreCheckArgs {
    file: PathBuf,
    #[arg(long)]
    lax: bool,
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    score: PathBuf,
    #[arg(long)]
    lax: bool,
    /// Override the score's clef: treble, bass or alto.
    #[arg(long)]
    clef: Option<String>,
    /// Override the reference letter that sits at height 0.
    #[arg(long = "ref")]
    reference: Option<char>,
    #[arg(long, default_value = "standard")]
    orientation: String,
    /// Sidecar file of extra edges, one `i j` pair per line.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Also join consecutive points of equal height.
    #[arg(long)]
    connect_equal: bool,
    /// Write the SVG drawing here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Write the JSON diagram here; without --svg or --json it goes to stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Encrypt(a) => commands::cipher(&a, true),
        Command::Decrypt(a) => commands::cipher(&a, false),
        Command::Attack(a) => commands::attack(&a),
        Command::Analyze(a) => commands::analyze(&a),
        Command::ScoreCheck(a) => commands::score_check(&a),
        Command::Graph(a) => commands::graph(&a),
    }
}

fn report(err: &CliError, color: bool) {
    let label = if color { "\x1b[31merror\x1b[0m" } else { "error" };
    eprintln!("brauer-kit: {label}[{}]: {err}", err.code);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let color = match ColorChoice::from_env() {
        Ok(c) => c,
        Err(e) => {
            report(&e, false);
            return ExitCode::from(e.exit_code());
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            report(&e, color.stderr_enabled());
            ExitCode::from(e.exit_code())
        }
    }
}
