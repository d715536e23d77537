use std::path::Path;

use clap::ValueEnum;
use evenpair_core::format::{parse_graph6, parse_trigraph_text, FormatError};
use evenpair_core::Trigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Trigraph,
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{origin}: {source}")]
    Parse { origin: String, source: FormatError },
}

/// True when the first non-comment line is a `trigraph` header.
fn looks_like_trigraph_text(s: &str) -> bool {
    s.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("trigraph"))
}

/// Reads `arg` as a file when one exists at that path, otherwise as an
/// inline literal. Without an explicit format, trigraph text is recognised
/// by its header and anything else is taken as graph6.
pub fn parse_input(arg: &str, format: Option<InputFormat>) -> Result<Trigraph, InputError> {
    let (text, origin) = if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|source| InputError::Io { path: arg.into(), source })?;
        (text, arg.to_string())
    } else {
        (arg.replace("\\n", "\n"), "<inline>".to_string())
    };
    let format = format.unwrap_or(if looks_like_trigraph_text(&text) { InputFormat::Trigraph } else { InputFormat::Graph6 });
    let parsed = match format {
        InputFormat::Trigraph => parse_trigraph_text(&text),
        InputFormat::Graph6 => parse_graph6(&text),
    };
    parsed.map_err(|source| InputError::Parse { origin, source })
}
