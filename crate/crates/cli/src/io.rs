use std::io::{IsTerminal, Read};
use std::path::Path;

use crate::error::{CliError, Result};

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::validation("io", format!("cannot read {}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| CliError::internal("io", format!("cannot write {}: {e}", path.display())))
}

/// Text from the positional argument, else the `--input` file, else stdin.
/// Trailing line breaks are dropped.
pub fn text_argument(text: Option<&str>, file: Option<&Path>) -> Result<String> {
    let raw = match (text, file) {
        (Some(_), Some(_)) => {
            return Err(CliError::validation("usage", "give the text or --input, not both"));
        }
        (Some(t), None) => t.to_string(),
        (None, Some(p)) => read_text(p)?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::validation("io", format!("cannot read stdin: {e}")))?;
            s
        }
    };
    Ok(raw.trim_end_matches(['\n', '\r']).to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorChoice {
    Never,
    Auto,
}

impl ColorChoice {
    pub fn from_env() -> Result<Self> {
        match std::env::var("BRAUER_KIT_COLOR").as_deref() {
            Err(_) | Ok("auto") | Ok("") => Ok(ColorChoice::Auto),
            Ok("never") => Ok(ColorChoice::Never),
            Ok(other) => Err(CliError::validation(
                "env",
                format!("BRAUER_KIT_COLOR must be `never` or `auto`, not `{other}`"),
            )),
        }
    }

    pub fn stderr_enabled(self) -> bool {
        self == ColorChoice::Auto && std::io::stderr().is_terminal()
    }
}
